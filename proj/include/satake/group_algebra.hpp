#pragma once

// Elements of a group algebra C[lattice] with Laurent coefficients, possibly
// truncated series with an explicit certified region.

#include <map>
#include <optional>
#include <string>

#include "satake/laurent.hpp"
#include "satake/lattice.hpp"
#include "satake/root_datum.hpp"

namespace satake {

/// Coefficients are certified exactly for weights mu with <mu, grading> <= bound.
struct Truncation {
  Weight grading;
  Int bound = 0;
  friend bool operator==(const Truncation&, const Truncation&) = default;
};

class GAElement {
 public:
  GAElement() = default;
  static GAElement monomial(const Weight& mu, const Laurent& c = Laurent(1));
  static GAElement one(std::size_t rank) { return monomial(Weight(rank)); }

  const std::map<Weight, Laurent>& terms() const { return t_; }
  const std::optional<Truncation>& truncation() const { return trunc_; }
  bool is_exact() const { return !trunc_.has_value(); }
  bool is_zero() const { return t_.empty(); }
  std::size_t size() const { return t_.size(); }

  bool certified(const Weight& mu) const;
  /// (f, e^mu); throws std::out_of_range outside the certified region.
  Laurent coeff(const Weight& mu) const;

  void add_term(const Weight& mu, const Laurent& c);

  GAElement& operator+=(const GAElement& o);
  GAElement& operator-=(const GAElement& o);
  friend GAElement operator+(GAElement a, const GAElement& b) { return a += b; }
  friend GAElement operator-(GAElement a, const GAElement& b) { return a -= b; }
  friend GAElement operator*(const GAElement& a, const GAElement& b);
  friend GAElement operator*(const Laurent& c, GAElement a);
  friend GAElement operator-(GAElement a) { return Laurent(-1) * std::move(a); }
  /// Exact equality; both sides must be exact.
  friend bool operator==(const GAElement& a, const GAElement& b);

  /// Drop terms above the bound and record the truncation.
  GAElement truncated(const Weight& grading, Int bound) const;
  /// Forget the truncation after checking that every stored term lies in the
  /// certified region (caller asserts the remaining support is complete).
  GAElement as_exact() const;
  /// Keep only terms satisfying the predicate; result is exact.
  template <class Pred>
  GAElement filtered(Pred keep) const {
    GAElement r;
    for (const auto& [w, c] : t_)
      if (keep(w)) r.t_.emplace(w, c);
    return r;
  }

  /// Apply a lattice map to the weights (exact elements only).
  GAElement mapped(const IntMatrix& m) const;
  /// e^mu -> e^{-mu}, coefficients conjugated.
  GAElement conj() const;
  /// Substitute q -> q^{-1} in all coefficients.
  GAElement invert_q() const;
  /// Sum of c_mu mu(t) for a finite-order torus element (exact only).
  Laurent evaluate_at(const RatVec& torus) const;
  /// Lowest grade among stored terms (exact or not).
  std::optional<Int> min_grade(const Weight& grading) const;

  std::string str() const;

 private:
  std::map<Weight, Laurent> t_;
  std::optional<Truncation> trunc_;
};

/// m_mu: sum over the W^theta-orbit of a dominant mu.
GAElement orbit_sum(const RootDatumTheta& d, const Weight& mu);
/// J(f) = sum_w (-1)^{l(w)} sum_mu c_mu e^{w . mu}
GAElement alt_symmetrize_J(const RootDatumTheta& d, const GAElement& f);
/// L(e^mu) = 0 on Y*_0 and (-1)^{l(x)} e^{x . mu} on Y*_x.
GAElement desymmetrize_L(const RootDatumTheta& d, const GAElement& f);
/// w f for a twisted Weyl element.
GAElement weyl_act(const RootDatumTheta& d, int w, const GAElement& f);
bool is_weyl_invariant(const RootDatumTheta& d, const GAElement& f);

}  // namespace satake
