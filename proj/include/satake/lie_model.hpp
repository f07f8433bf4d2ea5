#pragma once

// Explicit matrix realization of the Lie algebra of the dual group for the
// preset types, used to read off how pinned automorphisms, Tits lifts and
// torus elements act on root vectors.

#include <utility>
#include <vector>

#include "satake/cyclotomic.hpp"
#include "satake/lattice.hpp"
#include "satake/root_datum.hpp"

namespace satake {

/// A linear map of g sending each root vector X_k to coeff[k] X_{perm[k]}
/// and acting on the Cartan span {h_i} by the rational matrix cartan.
struct MonomialAction {
  std::vector<int> perm;
  std::vector<Cyclo> coeff;
  RatMatrix cartan;

  static MonomialAction identity(std::size_t n_roots, std::size_t cartan_dim);
  /// this after other
  MonomialAction after(const MonomialAction& other) const;
  MonomialAction power(int k) const;
  /// Eigenvalue of action^{len} on X_k where len is the orbit length of k.
  Cyclo orbit_eigenvalue(int root) const;
  std::vector<int> orbit(int root) const;
};

/// A normalizer element t * n_{i1}^{e1} ... n_{ik}^{ek} with t a finite order
/// torus element given as a rational cocharacter mod 1.
struct NormalizerElement {
  RatVec torus;
  std::vector<std::pair<int, int>> word;  // (simple position, +1 or -1)
};

class LieModel {
 public:
  explicit LieModel(const RootDatumTheta& datum);

  std::size_t dim() const { return basis_.size(); }
  std::size_t cartan_dim() const { return r_; }
  std::size_t matrix_size() const { return n_; }
  /// Basis index of root k (Cartan elements come first).
  std::size_t root_basis(int k) const { return r_ + static_cast<std::size_t>(k); }
  const RatMatrix& basis_matrix(std::size_t b) const { return basis_[b]; }

  /// Coordinates of a matrix in the basis; throws if it is not in g.
  RatVec coordinates(const RatMatrix& m) const;

  const MonomialAction& theta() const { return theta_; }
  /// Ad(n_i) for sign +1, Ad(n_i^{-1}) for sign -1.
  const MonomialAction& tits(int simple_pos, int sign) const;
  MonomialAction torus(const RatVec& cocharacter) const;
  /// Ad of a normalizer element.
  MonomialAction adjoint(const NormalizerElement& n) const;
  /// Ad(n) composed with the pinned theta.
  MonomialAction twisted(const NormalizerElement& n) const;

  /// Lie bracket in basis coordinates.
  RatVec bracket(const RatVec& x, const RatVec& y) const;

 private:
  MonomialAction read_monomial(const std::vector<RatMatrix>& images) const;

  const RootDatumTheta* datum_;
  std::size_t n_ = 0, r_ = 0;
  std::vector<RatMatrix> e_, f_, h_;
  std::vector<RatMatrix> basis_;
  std::vector<std::size_t> pivots_;
  RatMatrix pivot_inverse_;
  MonomialAction theta_;
  std::vector<MonomialAction> tits_plus_, tits_minus_;
};

/// finite-order torus value beta(t) = exp(2 pi i <beta, v>)
Cyclo character_value(const Weight& beta, const RatVec& v);

}  // namespace satake
