#include "doctest.h"

#include <random>

#include "satake/lie_model.hpp"

using namespace satake;

TEST_SUITE("lie_model") {

TEST_CASE("models build for all preset types") {
  for (std::string name : {"A1", "A3", "B2", "B3", "C3", "D4", "G2", "A2~2", "A4~2", "D4~3", "D5~2"}) {
    CAPTURE(name);
    auto d = RootDatumTheta::preset(name);
    LieModel g(d);
    CHECK(g.dim() == d.rank() + d.roots().size());
  }
}

TEST_CASE("pinned theta signs match the orbit classification") {
  for (std::string name : {"A2~2", "A3~2", "A4~2", "A5~2", "D4~2", "D4~3", "B3", "G2"}) {
    CAPTURE(name);
    auto d = RootDatumTheta::preset(name);
    LieModel g(d);
    for (const auto& o : d.orbits()) {
      CHECK(g.theta().perm[o.roots[0]] == d.theta_root(o.roots[0]));
      CHECK(g.theta().orbit_eigenvalue(o.roots[0]) == o.sign);
    }
    for (int i = 0; i < static_cast<int>(d.simple_roots().size()); ++i)
      CHECK(g.theta().coeff[d.simple_roots()[i]] == Cyclo(1));
  }
}

TEST_CASE("Tits lifts act by simple reflections") {
  for (std::string name : {"A3", "B2", "G2"}) {
    auto d = RootDatumTheta::preset(name);
    LieModel g(d);
    for (int i = 0; i < static_cast<int>(d.simple_roots().size()); ++i) {
      IntMatrix s = d.reflection(i);
      const auto& t = g.tits(i, 1);
      const auto& ti = g.tits(i, -1);
      for (std::size_t k = 0; k < d.roots().size(); ++k) {
        CHECK(t.perm[k] == d.act_on_root(s, static_cast<int>(k)));
        // n_i^2 = alpha_i^vee(-1)
        auto sq = t.after(t);
        Int p = dot(d.roots()[k], d.coroots()[d.simple_roots()[i]]);
        CHECK(sq.perm[k] == static_cast<int>(k));
        CHECK(sq.coeff[k] == Cyclo(p % 2 ? -1 : 1));
      }
      auto id = t.after(ti);
      for (std::size_t k = 0; k < d.roots().size(); ++k) {
        CHECK(id.perm[k] == static_cast<int>(k));
        CHECK(id.coeff[k] == Cyclo(1));
      }
    }
  }
}

TEST_CASE("Jacobi identity and theta is an automorphism") {
  for (std::string name : {"A2~2", "G2", "D4~3"}) {
    auto d = RootDatumTheta::preset(name);
    LieModel g(d);
    std::mt19937 rng(5);
    std::uniform_int_distribution<std::size_t> pick(0, g.dim() - 1);
    auto basis_vec = [&](std::size_t b) {
      RatVec v(g.dim(), 0);
      v[b] = 1;
      return v;
    };
    auto add = [](RatVec a, const RatVec& b) {
      for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
      return a;
    };
    auto apply_theta = [&](const RatVec& x) {
      RatVec y(g.dim(), 0);
      const auto& th = g.theta();
      for (std::size_t i = 0; i < g.cartan_dim(); ++i)
        for (std::size_t j = 0; j < g.cartan_dim(); ++j) y[i] += th.cartan(i, j) * x[j];
      for (std::size_t k = 0; k < th.perm.size(); ++k)
        y[g.root_basis(th.perm[k])] += th.coeff[k].rational() * x[g.root_basis(static_cast<int>(k))];
      return y;
    };
    for (int t = 0; t < 20; ++t) {
      RatVec x = basis_vec(pick(rng)), y = basis_vec(pick(rng)), z = basis_vec(pick(rng));
      RatVec j = add(add(g.bracket(x, g.bracket(y, z)), g.bracket(y, g.bracket(z, x))), g.bracket(z, g.bracket(x, y)));
      for (const auto& c : j) CHECK(c == 0);
      CHECK(apply_theta(g.bracket(x, y)) == g.bracket(apply_theta(x), apply_theta(y)));
    }
  }
}
}
