#pragma once

// Based root data of the dual group together with a pinned automorphism
// theta, the restricted root system on Y* = X*(T)^theta, and the twisted
// Weyl group W^theta.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "satake/cyclotomic.hpp"
#include "satake/lattice.hpp"

namespace satake {

/// (1 - zeta * q^{q2/2} * e^{weight})^mult
struct Factor {
  Cyclo zeta{1};
  int q2 = 0;
  Weight weight;
  int mult = 1;
};

enum class Diagram { A1, A2 };
enum class OrbitRole { A1Orbit, A2Beta, A2Gamma };

std::string to_string(Diagram d);
std::string to_string(OrbitRole r);

/// A theta-orbit of positive roots with its classification.
struct RootOrbit {
  std::vector<int> roots;  // indices into RootDatumTheta::roots()
  Diagram diagram = Diagram::A1;
  OrbitRole role = OrbitRole::A1Orbit;
  int b = 1;
  Weight norm;  // sum over the orbit
  Cyclo sign{1};  // eigenvalue of theta^{|orbit|} on a root vector of the orbit
};

struct RestrictedRoot {
  Weight vector;  // element of Y*
  Diagram diagram = Diagram::A1;
  int b = 1;
  std::vector<int> source_orbits;  // indices into orbits()
  std::vector<Factor> d_factors;   // product equals d_alpha(q)
  bool simple = false;             // comes from a simple orbit
};

struct TwistedWeyl {
  std::vector<IntMatrix> elements;          // matrices on X*
  std::vector<int> length;                  // length in W^theta generators
  std::vector<int> length_abs;              // length in W
  std::vector<std::vector<int>> word;       // reduced word in generators
  std::vector<IntMatrix> generators;        // one per simple orbit
  std::vector<std::vector<int>> generator_abs_word;
  std::map<IntMatrix, int> index;

  std::size_t size() const { return elements.size(); }
  int find(const IntMatrix& m) const;
};

class RootDatumTheta {
 public:
  /// General constructor. roots/coroots are paired entrywise; positive lists
  /// the positive roots (indices); theta acts on X* and must permute the
  /// positive system.
  RootDatumTheta(std::string name, std::size_t rank, std::vector<Weight> roots,
                 std::vector<Weight> coroots, const std::vector<int>& positive, IntMatrix theta,
                 std::size_t weyl_cap = 1000000);

  /// Presets "<T><n>[.sc|.ad][~k]" for T in A,B,C,D,G; the lattice suffix
  /// describes the dual group (default simply connected).
  static RootDatumTheta preset(const std::string& name);

  const std::string& name() const { return name_; }
  std::size_t rank() const { return rank_; }
  const std::vector<Weight>& roots() const { return roots_; }
  const std::vector<Weight>& coroots() const { return coroots_; }
  const std::vector<int>& positive_roots() const { return pos_; }
  bool is_positive(int root) const { return positive_[root]; }
  const std::vector<int>& simple_roots() const { return simple_; }
  /// Coordinates of a root in the simple roots (order of simple_roots()).
  const std::vector<Int>& simple_coords(int root) const { return simple_coords_[root]; }
  std::optional<int> root_index(const Weight& w) const;
  int negative_of(int root) const { return neg_[root]; }

  const IntMatrix& theta() const { return theta_; }
  const IntMatrix& theta_dual() const { return theta_dual_; }
  int theta_order() const { return order_; }
  bool theta_trivial() const { return order_ == 1; }
  int theta_root(int root) const { return theta_perm_[root]; }
  /// theta on simple positions: simple_roots()[i] -> simple_roots()[simple_perm(i)].
  int simple_perm(int i) const { return simple_perm_[i]; }

  /// Cartan integers <alpha_i^vee, alpha_j> over simple positions.
  Int cartan(std::size_t i, std::size_t j) const;
  std::size_t semisimple_rank() const { return simple_.size(); }
  bool is_semisimple() const { return simple_.size() == rank_; }
  /// Preset type letter ('A'..'G') and rank, or 0 for general data.
  char type_letter() const { return type_; }

  const std::vector<RootOrbit>& orbits() const { return orbits_; }
  /// theta-orbits of simple positions.
  const std::vector<std::vector<int>>& simple_orbits() const { return simple_orbits_; }
  const std::vector<RestrictedRoot>& restricted_roots() const { return restricted_; }

  /// Sum of positive roots, and of positive coroots.
  const Weight& rho2() const { return rho2_; }
  const Weight& rho2_dual() const { return rho2_dual_; }

  bool in_Y(const Weight& mu) const;
  bool is_dominant(const Weight& mu) const;
  /// <mu, 2 rho^vee>
  Int height2(const Weight& mu) const { return dot(mu, rho2_dual_); }
  /// Sum over the theta-orbit of mu (distinct elements).
  Weight norm(const Weight& mu) const;
  /// Sum over the orbit of mu under an arbitrary finite-order lattice map.
  static Weight orbit_sum(const IntMatrix& action, const Weight& mu);

  const TwistedWeyl& weyl() const { return weyl_; }
  /// w . mu = w(mu + rho) - rho
  Weight dot_action(int w, const Weight& mu) const;
  /// Element x with x . mu dominant, or nullopt when mu + rho is singular.
  std::optional<int> chamber_of(const Weight& mu) const;
  /// Simple orbits (indices into simple_orbits()) orthogonal to mu.
  std::vector<int> stabilizer_orbits(const Weight& mu) const;
  /// Elements of the parabolic subgroup generated by the given simple orbits.
  std::vector<int> parabolic(const std::vector<int>& orbits) const;

  /// Simple reflection of the absolute Weyl group on X*.
  IntMatrix reflection(int simple_pos) const;
  IntMatrix word_matrix(const std::vector<int>& word) const;
  /// Image of a root under a lattice automorphism preserving the root set.
  int act_on_root(const IntMatrix& w, int root) const;
  /// Number of positive roots sent to negative roots.
  int abs_length(const IntMatrix& w) const;
  /// Reduced word (simple positions) of an absolute Weyl group element.
  std::vector<int> reduced_word(const IntMatrix& w) const;
  /// Dual action on X_*: (w^{-1})^T.
  static IntMatrix dual_matrix(const IntMatrix& w);

  /// Dominant elements of Y* with <lambda, 2 rho^vee> <= max_height2, sorted
  /// by (height, coordinates). Requires a semisimple datum.
  std::vector<Weight> dominant_weights(Int max_height2) const;
  /// Dominant elements of Y* lying below mu in the dominance order.
  std::vector<Weight> dominant_below(const Weight& mu) const;
  /// lambda - mu a nonnegative integral combination of positive roots.
  bool dominance_leq(const Weight& mu, const Weight& lambda) const;
  /// Ordering used for index sets: (height, coordinates).
  bool index_less(const Weight& a, const Weight& b) const;

 private:
  void check_and_derive();
  void build_orbits();
  void build_restricted();
  void build_weyl(std::size_t cap);

  std::string name_;
  std::size_t rank_;
  std::vector<Weight> roots_, coroots_;
  std::vector<bool> positive_;
  std::vector<int> pos_, simple_, neg_;
  std::vector<std::vector<Int>> simple_coords_;
  std::map<Weight, int> root_index_;
  IntMatrix theta_, theta_dual_;
  int order_ = 1;
  std::vector<int> theta_perm_, simple_perm_;
  char type_ = 0;
  std::vector<RootOrbit> orbits_;
  std::vector<std::vector<int>> simple_orbits_;
  std::vector<RestrictedRoot> restricted_;
  Weight rho2_, rho2_dual_;
  TwistedWeyl weyl_;
};

/// The connected group G^_theta: root datum (Y*, Psi^red, ...) with trivial
/// automorphism, in coordinates of a basis of Y* = (X*)^theta.
struct FixedGroup {
  RootDatumTheta datum;
  IntMatrix embed;  // rank x k, columns are the basis of Y* in X* coordinates

  Weight to_ambient(const Weight& coords) const { return embed.apply(coords); }
  /// Coordinates of a theta-fixed vector; throws if it is not in Y*.
  Weight to_coords(const Weight& ambient) const;
};
FixedGroup theta_fixed_group(const RootDatumTheta& d);

}  // namespace satake
