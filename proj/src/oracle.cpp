#include "satake/oracle.hpp"

#include <functional>
#include <stdexcept>

#include "satake/spherical.hpp"

namespace satake::oracle {

namespace {

Weight dominant_conjugate(const RootDatumTheta& d, Weight v) {
  for (bool moved = true; moved;) {
    moved = false;
    for (int s : d.simple_roots()) {
      Int c = dot(v, d.coroots()[s]);
      if (c < 0) {
        v = v - c * d.roots()[s];
        moved = true;
      }
    }
  }
  return v;
}

}  // namespace

Int freudenthal_mult(const RootDatumTheta& d, const Weight& lambda, const Weight& mu) {
  if (!d.theta_trivial()) throw std::invalid_argument("Freudenthal oracle needs theta = 1");
  if (!d.is_dominant(lambda)) throw std::invalid_argument("highest weight must be dominant");
  // W-invariant form (x, y) = sum over positive coroots
  auto form = [&](const Weight& x, const Weight& y) {
    Int s = 0;
    for (int b : d.positive_roots()) s += dot(x, d.coroots()[b]) * dot(y, d.coroots()[b]);
    return s;
  };
  const Weight& rho2 = d.rho2();
  const Int top = form(lambda, lambda) + form(lambda, rho2);
  std::map<Weight, Int> memo;
  std::function<Int(const Weight&)> mult = [&](const Weight& v0) -> Int {
    Weight v = dominant_conjugate(d, v0);
    if (v == lambda) return 1;
    if (!d.dominance_leq(v, lambda)) return 0;
    auto it = memo.find(v);
    if (it != memo.end()) return it->second;
    Int num = 0;
    for (int a : d.positive_roots()) {
      const Weight& al = d.roots()[a];
      Weight x = v + al;
      for (; d.height2(x) <= d.height2(lambda); x = x + al) num += 2 * form(x, al) * mult(x);
    }
    Int den = top - form(v, v) - form(v, rho2);
    if (den <= 0 || num % den != 0) throw std::logic_error("Freudenthal recursion failed at " + v.str());
    return memo[v] = num / den;
  };
  return mult(mu);
}

Laurent kostant_count(const std::vector<Factor>& factors, const Weight& grading, const Weight& mu, bool q_graded) {
  std::vector<Int> step;
  for (const auto& f : factors) {
    if (f.mult < 1) throw std::invalid_argument("factor multiplicities must be positive");
    Int g = dot(f.weight, grading);
    if (g <= 0) throw std::domain_error("cone is unbounded along the grading");
    step.push_back(g);
  }
  Laurent total;
  // expand multiplicities into repeated factors
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < factors.size(); ++i)
    for (int k = 0; k < factors[i].mult; ++k) order.push_back(i);
  std::function<void(std::size_t, const Weight&, const Laurent&)> go = [&](std::size_t pos, const Weight& rest,
                                                                           const Laurent& w) {
    Int g = dot(rest, grading);
    if (g < 0) return;
    if (pos == order.size()) {
      if (rest.is_zero()) total += w;
      return;
    }
    const Factor& f = factors[order[pos]];
    Laurent c = q_graded ? Laurent::monomial(f.q2, f.zeta) : Laurent(1);
    Weight r = rest;
    Laurent wk = w;
    for (Int k = 0; k * step[order[pos]] <= g; ++k) {
      go(pos + 1, r, wk);
      r = r - f.weight;
      wk *= c;
    }
  };
  go(0, mu, Laurent(1));
  return total;
}

Laurent kostant_count(const RootDatumTheta& d, const Weight& mu, bool q_graded) {
  std::vector<Factor> fs;
  for (const auto& r : d.restricted_roots())
    for (const auto& f : r.d_factors) fs.push_back(f);
  return kostant_count(fs, d.rho2_dual(), mu, q_graded);
}

std::map<Weight, Laurent> peel_decompose(const RootDatumTheta& d, const GAElement& f) {
  if (!f.is_exact() || !is_weyl_invariant(d, f)) throw std::invalid_argument("peeling needs an exact invariant element");
  std::map<Weight, Laurent> out;
  GAElement rest = f;
  while (!rest.is_zero()) {
    const Weight* top = nullptr;
    for (const auto& [w, c] : rest.terms())
      if (d.is_dominant(w) && (!top || d.height2(w) > d.height2(*top))) top = &w;
    if (!top) throw std::logic_error("invariant element without a dominant term");
    Weight l = *top;
    Laurent c = rest.coeff(l);
    out[l] = c;
    rest -= c * tau(d, l);
  }
  return out;
}

Cyclo twisted_trace_adjoint(const RootDatumTheta& d, const LieModel& g, const RatVec& torus, bool normalize_highest) {
  const MonomialAction& th = g.theta();
  Cyclo tr(0);
  for (std::size_t i = 0; i < g.cartan_dim(); ++i) tr = tr + Cyclo(th.cartan(i, i));
  int highest = -1;
  for (std::size_t k = 0; k < d.roots().size(); ++k) {
    int kk = static_cast<int>(k);
    if (d.is_positive(kk) && (highest < 0 || d.height2(d.roots()[k]) > d.height2(d.roots()[highest]))) highest = kk;
    if (th.perm[k] != kk) continue;
    tr = tr + th.coeff[k] * character_value(d.roots()[k], torus);
  }
  if (normalize_highest && highest >= 0) {
    if (th.perm[highest] != highest) throw std::logic_error("theta moves the highest root");
    tr = tr / th.coeff[highest];
  }
  return tr;
}

GAElement trace_method_determinant(const RootDatumTheta& d, const LieModel& g, const std::vector<int>& roots) {
  const MonomialAction& th = g.theta();
  const std::size_t n = roots.size();
  std::vector<bool> in(d.roots().size(), false);
  for (int r : roots) in[r] = true;
  const std::size_t rank = d.rank();
  // p_k = tr((q theta E)^k): only vectors returning after k steps contribute
  std::vector<GAElement> p(n + 1);
  for (std::size_t k = 1; k <= n; ++k) {
    GAElement s;
    for (int r : roots) {
      Weight w(rank);
      Cyclo c(1);
      int cur = r;
      for (std::size_t j = 0; j < k; ++j) {
        w += d.roots()[cur];
        c *= th.coeff[cur];
        cur = th.perm[cur];
        if (!in[cur]) throw std::invalid_argument("root set is not theta-stable");
      }
      if (cur == r) s.add_term(w, Laurent::monomial(2 * static_cast<int>(k), c));
    }
    p[k] = s;
  }
  // Newton: k e_k = sum_{i=1}^k (-1)^{i-1} e_{k-i} p_i, det(1 - A) = sum (-1)^k e_k
  std::vector<GAElement> e(n + 1);
  e[0] = GAElement::one(rank);
  GAElement det = e[0];
  for (std::size_t k = 1; k <= n; ++k) {
    GAElement acc;
    for (std::size_t i = 1; i <= k; ++i) {
      GAElement t = e[k - i] * p[i];
      if (i % 2) acc += t;
      else acc -= t;
    }
    e[k] = Laurent(mpq_class(1, static_cast<long>(k))) * acc;
    if (k % 2) det -= e[k];
    else det += e[k];
  }
  return det;
}

GAElement rank1_satake(Int lambda) {
  if (lambda < 0) throw std::invalid_argument("rank-one weight must be nonnegative");
  auto m = [](Int l) {
    GAElement r = GAElement::monomial(Weight{l});
    if (l != 0) r.add_term(Weight{-l}, Laurent(1));
    return r;
  };
  GAElement inner;
  for (Int l = lambda - 2; l >= 0; l -= 2) inner += m(l);
  GAElement r = m(lambda) + (Laurent(1) - Laurent::q_pow(-1)) * inner;
  return Laurent::monomial(static_cast<int>(lambda)) * r;
}

}  // namespace satake::oracle
