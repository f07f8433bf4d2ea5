#pragma once

// Endoscopic data (H^ = C(s)^0 with xi(theta_H) = w. theta), transfer data
// relating twisted H-classes to theta-classes of G^, branching
// coefficients and the base-change matrix.

#include <memory>
#include <string>
#include <vector>

#include "satake/group_algebra.hpp"
#include "satake/lie_model.hpp"
#include "satake/partition.hpp"
#include "satake/root_datum.hpp"
#include "satake/spherical.hpp"

namespace satake {

struct EndoscopicDatum {
  std::string label;
  std::shared_ptr<const RootDatumTheta> G;
  std::shared_ptr<const LieModel> lie;  // built on *G
  RatVec s;                             // element of T^ as a cocharacter mod 1
  NormalizerElement w_dot;              // torus part and signed Tits word
  IntMatrix w;                          // action of w on X*
  IntMatrix theta1;                     // w theta on X*
  std::vector<int> roots_H;             // alpha(s) = 1
};

/// Checks that roots_H is w theta-stable, that w theta has finite order and
/// that w permutes the extended Dynkin diagram.
EndoscopicDatum make_endoscopic_datum(std::shared_ptr<const RootDatumTheta> G, const RatVec& s,
                                      const NormalizerElement& w_dot, std::string label = "");

/// Data (U^, phi, iota, epsilon, adapted positive system, w.). Lattice maps
/// are u x rank integer matrices applied to ambient X* coordinates of fixed
/// vectors: phi_star on Y*, iota_star on X*(T^_1) = (X*)^{w theta}.
struct TransferData {
  std::size_t u_rank = 0;
  IntMatrix phi_star, iota_star;
  RatVec epsilon;
  std::vector<int> B_adapted;  // positive roots of the w theta-adapted system
  std::vector<int> B1;         // theta-stable positive system
  NormalizerElement w_dot;     // the lift the data is built for
  std::string route;
};

/// Runs the reduction pipeline; throws std::runtime_error on an unsupported path.
TransferData construct_transfer_data(const EndoscopicDatum& endo);

struct TransferReport {
  bool conjugacy_proxy = false, regularity = false, partition_identity = false;
  bool pinning = false;  // w. theta fixes a pinning of H^ (positive system from B_adapted)
  std::vector<std::string> messages;
  bool ok() const { return conjugacy_proxy && regularity && partition_identity && pinning; }
};
TransferReport validate_transfer_data(const EndoscopicDatum& endo, const TransferData& D);

/// P(G^, Psi+_{w theta}(G^ \ H^), w. theta, E, q) with weights in X*(U^).
FactoredPartition endoscopic_partition(const EndoscopicDatum& endo, const TransferData& D);
/// Its E^{-1}, q = 1 expansion, certified for <nu, grading> <= depth where
/// grading = endoscopic_grading(endo, D).
GAElement endoscopic_expansion(const EndoscopicDatum& endo, const TransferData& D, Int depth);
/// A functional on X*(U^) negative on every factor weight of the partition
/// (smallest in a box sweep, so deterministic).
Weight endoscopic_grading(const EndoscopicDatum& endo, const TransferData& D);

/// phi*_eps D(G^, Psi+_{phi,theta,0}, theta, E^{-1}, 1)
Cyclo d0_constant(const EndoscopicDatum& endo, const TransferData& D);

/// H^ with roots_H, positive system from B_adapted and automorphism w theta.
RootDatumTheta endoscopic_group(const EndoscopicDatum& endo, const TransferData& D);

/// sum coeff(f, nu) nu(eps) e^{phi* nu}, on X*(U^).
GAElement restrict_character(const EndoscopicDatum& endo, const TransferData& D, const GAElement& f);
/// Inverse of iota* on its image; throws if the support leaves iota* X*(T^_1).
GAElement lift_to_T1(const EndoscopicDatum& endo, const TransferData& D, const GAElement& f);
/// iota* of an X*(T^_1) vector.
Weight iota_star(const TransferData& D, const Weight& mu);

/// H-dominant weights (in X*(T^_1)) met by restricting tau_lambda, closed downward.
std::vector<Weight> branching_columns(const EndoscopicDatum& endo, const TransferData& D,
                                      const std::vector<Weight>& index_G);
/// m(lambda, mu) = sum_w (-1)^{l w} (w.lambda)(eps) p_{mu - phi*(w.lambda)} / d0
CoeffMatrix branching_matrix(const EndoscopicDatum& endo, const TransferData& D, const std::vector<Weight>& index_G,
                             const std::vector<Weight>& index_H);
/// m_1(lambda, mu) = m_2(lambda, mu) mu(t)
CoeffMatrix apply_transform_rule(const CoeffMatrix& m, const RatVec& t);

/// B = g m t^H, cross-checked against restrict_character(f^_lambda).
CoeffMatrix base_change_matrix(const EndoscopicDatum& endo, const TransferData& D, const std::vector<Weight>& index_G,
                               const std::vector<Weight>& index_H);

/// Named endoscopic data on the presets.
std::vector<std::string> endoscopic_catalog();
EndoscopicDatum catalog_datum(const std::string& name);

}  // namespace satake
