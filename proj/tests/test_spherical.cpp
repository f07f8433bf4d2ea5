#include "doctest.h"

#include <cmath>

#include "satake/spherical.hpp"

using namespace satake;

namespace {
Laurent q(int k) { return Laurent::q_pow(k); }
Laurent qh(int e2) { return Laurent::monomial(e2); }
GAElement m(const RootDatumTheta& d, const Weight& w) { return orbit_sum(d, w); }
}  // namespace

TEST_SUITE("spherical") {

TEST_CASE("twisted characters") {
  auto a1 = RootDatumTheta::preset("A1");
  CHECK(tau(a1, Weight{2}) == m(a1, Weight{2}) + m(a1, Weight{0}));
  CHECK(tau(a1, Weight{0}) == GAElement::one(1));
  CHECK(tau(a1, Weight{3}) == m(a1, Weight{3}) + m(a1, Weight{1}));
  auto t = RootDatumTheta::preset("A2~2");
  CHECK(tau(t, Weight{1, 1}) == m(t, Weight{1, 1}));
  CHECK(tau(t, Weight{0, 0}) == GAElement::one(2));
  CHECK_THROWS(tau(a1, Weight{-2}));
}

TEST_CASE("L(tau_lambda) = e^lambda") {
  for (std::string name : {"A1", "A2", "B2", "G2", "A2~2", "A3~2", "D4~3"}) {
    CAPTURE(name);
    auto d = RootDatumTheta::preset(name);
    for (const auto& l : d.dominant_weights(10)) CHECK(desymmetrize_L(d, tau(d, l)) == GAElement::monomial(l));
  }
}

TEST_CASE("q-characters") {
  auto a1 = RootDatumTheta::preset("A1");
  CHECK(tau_q_coeff(a1, Weight{2}, Weight{2}, QSign::QInverse) == Laurent(1));
  CHECK(tau_q_coeff(a1, Weight{2}, Weight{0}, QSign::QInverse) == q(-1));
  CHECK(tau_q_coeff(a1, Weight{2}, Weight{0}, QSign::Q) == q(1));
  CHECK(tau_q_coeff(a1, Weight{2}, Weight{4}, QSign::Q).is_zero());
  CHECK(tau_q_coeff(a1, Weight{2}, Weight{1}, QSign::Q).is_zero());
  auto g2 = RootDatumTheta::preset("G2");
  for (const auto& l : g2.dominant_weights(16))
    for (const auto& mu : g2.dominant_weights(16)) {
      auto c = tau_q_coeff(g2, l, mu, QSign::QInverse);
      CHECK(Laurent(c.at_one()) == tau(g2, l).coeff(mu));
    }
}

TEST_CASE("weight multiplicities and their inverse") {
  auto a1 = RootDatumTheta::preset("A1");
  auto idx = index_set(a1, 4);
  auto mm = weight_mult_matrix(a1, idx);
  CHECK(mm.get(Weight{2}, Weight{0}) == Laurent(1));
  CHECK(mm.get(Weight{2}, Weight{1}).is_zero());
  auto n = van_leeuwen_inverse(a1, idx);
  CHECK(n.get(Weight{2}, Weight{2}) == Laurent(1));
  CHECK(n.get(Weight{2}, Weight{0}) == Laurent(-1));
  CHECK(n.get(Weight{1}, Weight{1}) == Laurent(1));
  auto r1 = *n.row_of(Weight{1});
  int count = 0;
  for (const auto& [ij, v] : n.entries) count += ij.first == r1;
  CHECK(count == 1);
  CHECK(n.get(Weight{0}, Weight{0}) == Laurent(1));

  auto g2 = RootDatumTheta::preset("G2");
  Weight theta_root = g2.roots()[g2.positive_roots().back()];
  for (int r : g2.positive_roots())
    if (g2.height2(g2.roots()[r]) > g2.height2(theta_root)) theta_root = g2.roots()[r];
  CHECK(tau(g2, theta_root).coeff(Weight{0, 0}) == Laurent(2));

  for (std::string name : {"A1", "A2", "B2", "C2", "G2", "A2~2", "A3~2", "A3", "B3", "A4~2"}) {
    CAPTURE(name);
    auto d = RootDatumTheta::preset(name);
    auto ix = index_set(d, name.size() > 2 && name[1] == '3' ? 10 : 12);
    auto M = weight_mult_matrix(d, ix), N = van_leeuwen_inverse(d, ix);
    CHECK((M * N).is_identity());
    CHECK((N * M).is_identity());
    for (const auto& [ij, v] : M.entries) {
      CHECK(d.dominance_leq(ix[ij.second], ix[ij.first]));
      CHECK(v.is_constant());
    }
    for (std::size_t i = 0; i < ix.size(); ++i) CHECK(M.at(i, i) == Laurent(1));
  }
}

TEST_CASE("saturation is enforced") {
  auto a1 = RootDatumTheta::preset("A1");
  CHECK_THROWS_AS(weight_mult_matrix(a1, {Weight{2}}), std::invalid_argument);
  CHECK_THROWS_AS(weight_mult_matrix(a1, {Weight{-2}}), std::invalid_argument);
  CHECK_NOTHROW(weight_mult_matrix(a1, {Weight{0}, Weight{2}}));
}

TEST_CASE("Poincare polynomials and c constants") {
  auto a1 = RootDatumTheta::preset("A1");
  auto t = RootDatumTheta::preset("A2~2");
  CHECK(q_poincare(a1, {0}) == Laurent(1) + q(-1));
  CHECK(q_poincare(t) == Laurent(1) + q(-3));
  CHECK(q_poincare(a1, {}) == Laurent(1));
  CHECK(c_constant(a1, Weight{2}) == q(1) + Laurent(1));
  CHECK(c_constant(a1, Weight{0}) == Laurent(1));
  CHECK(c_constant(a1, Weight{2}) * qh(a1.height2(Weight{2})) == q(2) + q(1));
  // Q(1) = |W^theta|
  for (std::string name : {"B3", "G2", "D4~3", "A4~2"}) {
    auto d = RootDatumTheta::preset(name);
    CHECK(q_poincare(d).at_one() == Cyclo(static_cast<long>(d.weyl().size())));
  }
}

TEST_CASE("Macdonald transforms") {
  auto a1 = RootDatumTheta::preset("A1");
  CHECK(macdonald_fhat(a1, Weight{2}) == q(1) * m(a1, Weight{2}) + (q(1) - Laurent(1)) * m(a1, Weight{0}));
  CHECK(macdonald_fhat(a1, Weight{0}) == GAElement::one(1));
  CHECK(macdonald_fhat(a1, Weight{1}) == qh(1) * m(a1, Weight{1}));
  for (std::string name : {"A2", "B2", "G2", "A2~2", "A3~2", "D4~3"}) {
    CAPTURE(name);
    auto d = RootDatumTheta::preset(name);
    CHECK(macdonald_fhat(d, Weight(d.rank())) == GAElement::one(d.rank()));
  }
}

TEST_CASE("Macdonald sum agrees numerically with the finite formula") {
  for (std::string name : {"A1", "A2", "B2", "G2", "A2~2", "A3~2"}) {
    CAPTURE(name);
    auto d = RootDatumTheta::preset(name);
    Parameter s;
    for (std::size_t i = 0; i < d.rank(); ++i) s.push_back(std::polar(1.0 + 0.1 * i, 0.3 + 0.7 * i));
    for (double q0 : {4.0, 9.0})
      for (const auto& l : d.dominant_weights(8)) {
        auto lhs = macdonald_sum(d, l).evaluate(s, q0);
        auto rhs = evaluate_numeric(macdonald_fhat(d, l), s, q0);
        CHECK(std::abs(lhs - rhs) < 1e-8 * (1 + std::abs(rhs)));
      }
  }
}

TEST_CASE("spherical function Gamma") {
  auto a1 = RootDatumTheta::preset("A1");
  Parameter s{std::polar(1.3, 0.4)};
  CHECK(std::abs(spherical_gamma(a1, Weight{0}).evaluate(s, 9.0) - 1.0) < 1e-10);
  // e^alpha -> q
  Parameter sq{std::sqrt(9.0)};
  auto v = spherical_gamma(a1, Weight{2}).evaluate(sq, 9.0);
  CHECK(std::isfinite(v.real()));
  CHECK_THROWS_AS(spherical_gamma(a1, Weight{2}).evaluate({1.0}, 9.0), std::domain_error);
  auto t = RootDatumTheta::preset("A2~2");
  Parameter st{std::polar(1.1, 0.2), std::polar(0.9, 0.5)};
  CHECK(std::abs(spherical_gamma(t, Weight{0, 0}).evaluate(st, 4.0) - 1.0) < 1e-10);
  // f^ = q^{2<lambda,rho^vee>} (Q / Q_S) Gamma
  for (const auto& l : a1.dominant_weights(6)) {
    auto g = spherical_gamma(a1, l).evaluate(s, 9.0);
    double pre = std::pow(9.0, static_cast<double>(a1.height2(l))) * q_poincare(a1).evaluate(9.0).real() /
                 q_poincare(a1, a1.stabilizer_orbits(l)).evaluate(9.0).real();
    CHECK(std::abs(pre * g - evaluate_numeric(macdonald_fhat(a1, l), s, 9.0)) < 1e-8);
  }
}

TEST_CASE("Satake matrices") {
  auto a1 = RootDatumTheta::preset("A1");
  auto idx = index_set(a1, 4);
  auto g = geometric_satake(a1, idx);
  CHECK(g.get(Weight{2}, Weight{2}) == q(1));
  CHECK(g.get(Weight{2}, Weight{0}) == Laurent(-1));
  CHECK(g.get(Weight{0}, Weight{0}) == Laurent(1));
  auto s = satake_matrix(a1, idx);
  CHECK(s.get(Weight{2}, Weight{2}) == q(1));
  CHECK(s.get(Weight{2}, Weight{0}) == q(1) - Laurent(1));
  CHECK(s.get(Weight{0}, Weight{0}) == Laurent(1));
  CHECK(s.get(Weight{1}, Weight{1}) == qh(1));
  auto t = kato_lusztig_matrix(a1, idx);
  CHECK(t.get(Weight{2}, Weight{2}) == q(-1));
  CHECK(t.get(Weight{2}, Weight{0}) == q(-1));
  CHECK(t.get(Weight{0}, Weight{0}) == Laurent(1));
  CHECK((t * g).is_identity());
  CHECK((g * t).is_identity());
}

TEST_CASE("inverse pairs and triangularity") {
  for (std::string name : {"A1", "A2", "B2", "G2", "A2~2", "A3~2", "A3", "C3", "D4~3"}) {
    CAPTURE(name);
    auto d = RootDatumTheta::preset(name);
    auto ix = index_set(d, d.rank() >= 3 ? 8 : 12);
    auto g = geometric_satake(d, ix), s = satake_matrix(d, ix), t = kato_lusztig_matrix(d, ix);
    auto M = weight_mult_matrix(d, ix), N = van_leeuwen_inverse(d, ix);
    CHECK((t * g).is_identity());
    CHECK((g * t).is_identity());
    CHECK(((t * s) * N).is_identity());
    CHECK(s == g * M);
    for (std::size_t i = 0; i < ix.size(); ++i) {
      CHECK(s.at(i, i) == qh(d.height2(ix[i])));
      CHECK(g.at(i, i) == qh(d.height2(ix[i])));
      CHECK(t.at(i, i) == qh(-d.height2(ix[i])));
    }
    for (const auto* mat : {&g, &s, &t})
      for (const auto& [ij, v] : mat->entries) CHECK(d.dominance_leq(ix[ij.second], ix[ij.first]));
  }
}

TEST_CASE("Plancherel pairing") {
  auto a1 = RootDatumTheta::preset("A1");
  CHECK(std::abs(plancherel_pair(a1, Weight{0}, Weight{0}, 9.0) - 1.0) < 1e-8);
  CHECK(std::abs(plancherel_pair(a1, Weight{2}, Weight{2}, 9.0) - 90.0) < 1e-6);
  CHECK(std::abs(plancherel_pair(a1, Weight{2}, Weight{0}, 9.0)) < 1e-6);
  CHECK_THROWS(plancherel_pair(a1, Weight{0}, Weight{0}, 1.0));
  for (std::string name : {"A2~2", "B2", "G2"}) {
    CAPTURE(name);
    auto d = RootDatumTheta::preset(name);
    CHECK(std::abs(plancherel_pair(d, Weight(d.rank()), Weight(d.rank()), 9.0) - 1.0) < 1e-8);
    auto ws = d.dominant_weights(6);
    for (const auto& l : ws)
      for (const auto& mu : ws) {
        auto v = plancherel_pair(d, l, mu, 9.0);
        double want = 0;
        if (l == mu) want = (c_constant(d, mu) * qh(d.height2(mu))).evaluate(9.0).real();
        CHECK(std::abs(v - want) < 1e-6 * (1 + want));
      }
  }
}

TEST_CASE("averaging lemma") {
  for (std::string name : {"A1", "A2~2", "B2"}) {
    CAPTURE(name);
    auto d = RootDatumTheta::preset(name);
    auto ws = d.dominant_weights(6);
    for (const auto& l : ws)
      for (const auto& mu : ws) {
        auto lhs = plancherel_inner(d, tau(d, l), macdonald_fhat(d, mu), 9.0);
        double rhs = (c_constant(d, mu) * tau_q_coeff(d, l, mu, QSign::QInverse)).evaluate(9.0).real();
        CHECK(std::abs(lhs - rhs) < 1e-6 * (1 + std::abs(rhs)));
      }
  }
}
TEST_CASE("twisted characters are characters of the fixed group") {
  for (std::string name : {"A2~2", "A3~2", "A4~2", "D4~3"}) {
    CAPTURE(name);
    auto d = RootDatumTheta::preset(name);
    auto fg = theta_fixed_group(d);
    CHECK(fg.datum.theta_trivial());
    CHECK(fg.datum.rank() == fg.embed.cols());
    for (const auto& lambda : index_set(d, name == "D4~3" ? 8 : 10)) {
      CAPTURE(lambda.str());
      Weight c = fg.to_coords(lambda);
      CHECK(fg.datum.is_dominant(c));
      CHECK(tau(fg.datum, c).mapped(fg.embed) == tau(d, lambda));
    }
  }
}

}
