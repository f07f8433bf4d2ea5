#pragma once

// Twisted characters, weight multiplicities, the Satake transforms of the
// characteristic functions f_mu and the matrices relating the bases.

#include <complex>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "satake/group_algebra.hpp"
#include "satake/partition.hpp"
#include "satake/root_datum.hpp"

namespace satake {

/// Sparse matrix indexed by explicit lists of dominant weights.
struct CoeffMatrix {
  std::vector<Weight> rows, cols;
  std::map<std::pair<std::size_t, std::size_t>, Laurent> entries;

  CoeffMatrix() = default;
  CoeffMatrix(std::vector<Weight> r, std::vector<Weight> c) : rows(std::move(r)), cols(std::move(c)) {}
  static CoeffMatrix identity(const std::vector<Weight>& index);

  Laurent at(std::size_t i, std::size_t j) const;
  /// Entry by weights; zero when either weight is absent.
  Laurent get(const Weight& row, const Weight& col) const;
  void set(std::size_t i, std::size_t j, const Laurent& v);
  std::optional<std::size_t> row_of(const Weight& w) const;
  std::optional<std::size_t> col_of(const Weight& w) const;

  friend CoeffMatrix operator*(const CoeffMatrix& a, const CoeffMatrix& b);
  friend bool operator==(const CoeffMatrix& a, const CoeffMatrix& b);
  bool is_identity() const;
};

/// Dominant weights of height2 <= max_height2 (a saturated set).
std::vector<Weight> index_set(const RootDatumTheta& d, Int max_height2);
/// Throws std::invalid_argument unless every dominant weight below a member
/// is a member, and every member is dominant.
void require_saturated(const RootDatumTheta& d, const std::vector<Weight>& index);

/// Twisted character tau_lambda = J(e^lambda) P(E^{-1}, 1).
GAElement tau(const RootDatumTheta& d, const Weight& lambda);

enum class QSign { Q, QInverse };
/// J(e^lambda) P(E^{-1}, q^{+-1}) truncated in the lowering grading: certified
/// for every mu with -height2(mu) <= bound.
GAElement tau_q_series(const RootDatumTheta& d, const Weight& lambda, QSign s, Int bound);
/// (tau_{lambda, q^{+-1}}, e^mu)
Laurent tau_q_coeff(const RootDatumTheta& d, const Weight& lambda, const Weight& mu, QSign s);

/// m_{lambda,mu} = (tau_lambda, e^mu)
CoeffMatrix weight_mult_matrix(const RootDatumTheta& d, const std::vector<Weight>& index);
/// n with m_lambda = sum_mu n_{lambda,mu} tau_mu.
CoeffMatrix van_leeuwen_inverse(const RootDatumTheta& d, const std::vector<Weight>& index);

/// Q_S(q^{-1}) for a set of simple orbits (indices into simple_orbits()).
Laurent q_poincare(const RootDatumTheta& d, const std::vector<int>& S);
/// Q(q^{-1}) for all simple orbits.
Laurent q_poincare(const RootDatumTheta& d);
/// c_mu = q^{<mu, rho^vee>} Q / Q_{S(mu)}
Laurent c_constant(const RootDatumTheta& d, const Weight& mu);

/// Coefficients g_{lambda,nu} of f^_lambda in the tau basis.
std::map<Weight, Laurent> geometric_satake_row(const RootDatumTheta& d, const Weight& lambda);
/// f^_lambda as an element of C[Y*].
GAElement macdonald_fhat(const RootDatumTheta& d, const Weight& lambda);

CoeffMatrix geometric_satake(const RootDatumTheta& d, const std::vector<Weight>& index);
/// s_{lambda,mu} = (f^_lambda, e^mu)
CoeffMatrix satake_matrix(const RootDatumTheta& d, const std::vector<Weight>& index);
/// t_{lambda,mu} = (tau_{lambda,q^{-1}}, e^mu) q^{-<mu, rho^vee>}
CoeffMatrix kato_lusztig_matrix(const RootDatumTheta& d, const std::vector<Weight>& index);

/// Unramified parameter: value of e^{e_i} for each coordinate of X*.
using Parameter = std::vector<std::complex<double>>;
std::complex<double> evaluate_numeric(const GAElement& f, const Parameter& s, double q0);

/// prefactor * sum_w e^{w lambda} P(E^{-w},1)/P(E^{-w},q^{-1}), evaluated numerically.
struct WeylSum {
  const RootDatumTheta* datum = nullptr;
  Weight lambda;
  Laurent numerator, denominator;  // prefactor = numerator / denominator
  /// Throws std::domain_error when the parameter hits a pole.
  std::complex<double> evaluate(const Parameter& s, double q0) const;
};
/// Gamma_lambda with prefactor q^{-<lambda, rho^vee>} / Q(q^{-1}).
WeylSum spherical_gamma(const RootDatumTheta& d, const Weight& lambda);
/// Macdonald's sum for f^_lambda, prefactor q^{<lambda, rho^vee>} / Q_{S(lambda)}(q^{-1}).
WeylSum macdonald_sum(const RootDatumTheta& d, const Weight& lambda);

/// <f, g> against the Plancherel measure at q = q0 (numeric). The density
/// series keeps terms with |height2| <= height_bound; 0 picks a bound from
/// the largest restricted root.
std::complex<double> plancherel_inner(const RootDatumTheta& d, const GAElement& f, const GAElement& g, double q0,
                                      Int height_bound = 0);
std::complex<double> plancherel_pair(const RootDatumTheta& d, const Weight& lambda, const Weight& mu, double q0,
                                     Int height_bound = 0);

}  // namespace satake
