#pragma once

// Brute-force reference computations used to cross-check the library:
// Freudenthal multiplicities, explicit partition counts, leading-term
// peeling, direct traces on the adjoint representation, rank-one closed forms.

#include <map>
#include <vector>

#include "satake/group_algebra.hpp"
#include "satake/lie_model.hpp"
#include "satake/root_datum.hpp"

namespace satake::oracle {

/// Multiplicity of mu in the irreducible representation of highest weight
/// lambda (theta = 1 only), by the Freudenthal recursion.
Int freudenthal_mult(const RootDatumTheta& d, const Weight& lambda, const Weight& mu);

/// Sum over all ways of writing mu = sum k_i w_i over the factor weights of
/// prod (zeta_i q^{q2_i/2})^{k_i}, by enumeration. With q_graded = false
/// the weights (1 each) are counted instead. The grading must be positive
/// on every factor weight (std::domain_error otherwise).
Laurent kostant_count(const std::vector<Factor>& factors, const Weight& grading, const Weight& mu, bool q_graded);
/// Counts over the d-factors of the restricted positive system.
Laurent kostant_count(const RootDatumTheta& d, const Weight& mu, bool q_graded);

/// c with f = sum c_lambda tau_lambda, by repeatedly removing the top term.
std::map<Weight, Laurent> peel_decompose(const RootDatumTheta& d, const GAElement& f);

/// Trace of theta o Ad(t) on g for t = exp(2 pi i v). With normalize_highest
/// the result is rescaled so theta fixes the highest root vector.
Cyclo twisted_trace_adjoint(const RootDatumTheta& d, const LieModel& g, const RatVec& torus, bool normalize_highest);

/// det(1 - q theta E) on the span of the given root vectors, from the power
/// traces tr((q theta E)^k) and Newton's identities.
GAElement trace_method_determinant(const RootDatumTheta& d, const LieModel& g, const std::vector<int>& roots);

/// q^{lambda/2} (m_lambda + (1 - q^{-1}) (m_{lambda-2} + m_{lambda-4} + ...)) for split A1.
GAElement rank1_satake(Int lambda);

}  // namespace satake::oracle
