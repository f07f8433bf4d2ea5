#pragma once

// q-determinants det(1 - q theta_1 E; V_R) and q-partition functions in
// factored form, their certified expansions, and related evaluations.

#include <map>
#include <vector>

#include "satake/group_algebra.hpp"
#include "satake/lie_model.hpp"
#include "satake/root_datum.hpp"

namespace satake {

struct FactoredPartition {
  std::vector<Factor> factors;
  bool inverse = false;  // false: product of factors (determinant); true: its inverse

  /// Merge equal factors and sort canonically.
  FactoredPartition normalized() const;
  FactoredPartition inverted() const;
  /// e^mu -> e^{-mu}
  FactoredPartition invert_E() const;
  /// q -> q^{-1}
  FactoredPartition invert_q() const;
  /// q -> 1
  FactoredPartition at_q_one() const;
  /// Apply a lattice map to every factor weight.
  FactoredPartition mapped(const IntMatrix& m) const;
  FactoredPartition times(const FactoredPartition& o) const;

  /// Multiset equality after normalization (orientation-aware).
  friend bool operator==(const FactoredPartition& a, const FactoredPartition& b);
  std::string str() const;
};

/// det(1 - q theta E; g_R) for a theta-stable set R of roots, built from
/// theta-orbit blocks with the pinned orbit signs.
FactoredPartition adjoint_determinant(const RootDatumTheta& d, const std::vector<int>& R);
/// Same for a twisted action on g (root-vector part) together with its
/// lattice action on X*; factor weights are orbit sums under the lattice action.
FactoredPartition adjoint_determinant(const RootDatumTheta& d, const MonomialAction& action,
                                      const IntMatrix& lattice_action, const std::vector<int>& R);
/// Product of the d-factors of the restricted positive system.
FactoredPartition restricted_determinant(const RootDatumTheta& d);

/// Certified expansion; terms with <mu, grading> <= bound are exact. Inverse
/// factors need <weight, grading> > 0.
GAElement expand(const FactoredPartition& p, const Weight& grading, Int bound);
/// Expansion that is exact when no factor has a negative exponent.
GAElement expand_exact(const FactoredPartition& p, std::size_t rank);

/// P(E^{-1}, q^{-1})^{-1} = sum_{mu in C} p_mu(q^{-1}) e^mu
std::map<Weight, Laurent> expansion_set_C(const RootDatumTheta& d);

/// prod (1 - c X^b)^{mult} in a formal variable X = q^{-s}, kept as a ratio.
struct LFunction {
  Laurent numerator, denominator;  // polynomials in X, stored with X as the q variable
  std::string str() const;
};
LFunction l_function_evaluate(const FactoredPartition& p, const RatVec& parameter);

/// chi~_q * P(E^{-1}, q) = 1 on the certified region of height <= max_height2.
bool q_graded_euler_check(const RootDatumTheta& d, Int max_height2);

/// -<., 2 rho^vee>: positive on negative roots.
Weight lowering_grading(const RootDatumTheta& d);

}  // namespace satake
