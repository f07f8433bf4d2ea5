#include "satake/partition.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace satake {

namespace {

bool factor_less(const Factor& a, const Factor& b) {
  if (!(a.weight == b.weight)) return a.weight < b.weight;
  if (a.q2 != b.q2) return a.q2 < b.q2;
  int m = std::lcm(a.zeta.modulus(), b.zeta.modulus());
  return a.zeta.lifted(m).coeffs() < b.zeta.lifted(m).coeffs();
}

bool same_base(const Factor& a, const Factor& b) {
  return a.weight == b.weight && a.q2 == b.q2 && a.zeta == b.zeta;
}

}  // namespace

FactoredPartition FactoredPartition::normalized() const {
  std::vector<Factor> fs;
  for (Factor f : factors) {
    if (inverse) f.mult = -f.mult;
    fs.push_back(f);
  }
  std::sort(fs.begin(), fs.end(), factor_less);
  FactoredPartition r;
  for (const auto& f : fs) {
    if (!r.factors.empty() && same_base(r.factors.back(), f))
      r.factors.back().mult += f.mult;
    else
      r.factors.push_back(f);
    if (r.factors.back().mult == 0) r.factors.pop_back();
  }
  return r;
}

FactoredPartition FactoredPartition::inverted() const {
  FactoredPartition r = *this;
  r.inverse = !inverse;
  return r;
}

FactoredPartition FactoredPartition::invert_E() const {
  FactoredPartition r = *this;
  for (auto& f : r.factors) f.weight = -f.weight;
  return r;
}

FactoredPartition FactoredPartition::invert_q() const {
  FactoredPartition r = *this;
  for (auto& f : r.factors) f.q2 = -f.q2;
  return r;
}

FactoredPartition FactoredPartition::at_q_one() const {
  FactoredPartition r = *this;
  for (auto& f : r.factors) f.q2 = 0;
  return r;
}

FactoredPartition FactoredPartition::mapped(const IntMatrix& m) const {
  FactoredPartition r = *this;
  for (auto& f : r.factors) f.weight = m.apply(f.weight);
  return r;
}

FactoredPartition FactoredPartition::times(const FactoredPartition& o) const {
  FactoredPartition a = normalized(), b = o.normalized();
  a.factors.insert(a.factors.end(), b.factors.begin(), b.factors.end());
  return a.normalized();
}

bool operator==(const FactoredPartition& a, const FactoredPartition& b) {
  auto x = a.normalized(), y = b.normalized();
  if (x.factors.size() != y.factors.size()) return false;
  for (std::size_t i = 0; i < x.factors.size(); ++i)
    if (!same_base(x.factors[i], y.factors[i]) || x.factors[i].mult != y.factors[i].mult) return false;
  return true;
}

std::string FactoredPartition::str() const {
  std::ostringstream os;
  auto n = normalized();
  if (n.factors.empty()) return "1";
  bool first = true;
  for (const auto& f : n.factors) {
    if (!first) os << " * ";
    first = false;
    os << "(1 - (" << f.zeta.str() << ")*q^(" << f.q2 << "/2)*e^" << f.weight.str() << ")";
    if (f.mult != 1) os << "^" << f.mult;
  }
  return os.str();
}

FactoredPartition adjoint_determinant(const RootDatumTheta& d, const std::vector<int>& R) {
  // Coefficients reproducing the pinned orbit signs: the sign sits on one root.
  MonomialAction a = MonomialAction::identity(d.roots().size(), d.semisimple_rank());
  for (std::size_t k = 0; k < d.roots().size(); ++k) a.perm[k] = d.theta_root(static_cast<int>(k));
  for (const auto& o : d.orbits()) {
    a.coeff[o.roots[0]] = o.sign;
    a.coeff[d.negative_of(o.roots[0])] = o.sign;
  }
  return adjoint_determinant(d, a, d.theta(), R);
}

FactoredPartition adjoint_determinant(const RootDatumTheta& d, const MonomialAction& action,
                                      const IntMatrix& lattice_action, const std::vector<int>& R) {
  std::set<int> rs(R.begin(), R.end());
  std::set<int> done;
  FactoredPartition p;
  for (int k : R) {
    if (done.count(k)) continue;
    auto orb = action.orbit(k);
    Weight norm(d.rank());
    for (int x : orb) {
      if (!rs.count(x)) throw std::invalid_argument("root set is not stable under the action");
      done.insert(x);
      norm += d.roots()[x];
    }
    if (!(lattice_action.apply(d.roots()[k]) == d.roots()[action.perm[k]]))
      throw std::invalid_argument("lattice action does not match the action on root vectors");
    Factor f;
    f.zeta = action.orbit_eigenvalue(k);
    f.q2 = 2 * static_cast<int>(orb.size());
    f.weight = norm;
    p.factors.push_back(f);
  }
  return p.normalized();
}

FactoredPartition restricted_determinant(const RootDatumTheta& d) {
  FactoredPartition p;
  for (const auto& r : d.restricted_roots())
    for (const auto& f : r.d_factors) p.factors.push_back(f);
  return p.normalized();
}

namespace {

GAElement binomial_power(const Factor& f, std::size_t rank) {
  // (1 - zeta q^{q2/2} e^w)^mult, mult > 0
  GAElement base = GAElement::one(rank);
  base.add_term(f.weight, -Laurent::monomial(f.q2, f.zeta));
  GAElement r = GAElement::one(rank);
  for (int i = 0; i < f.mult; ++i) r = r * base;
  return r;
}

}  // namespace

GAElement expand_exact(const FactoredPartition& p, std::size_t rank) {
  GAElement r = GAElement::one(rank);
  for (const auto& f : p.normalized().factors) {
    if (f.mult < 0) throw std::invalid_argument("expand_exact: factor with a negative exponent");
    r = r * binomial_power(f, rank);
  }
  return r;
}

GAElement expand(const FactoredPartition& p, const Weight& g, Int bound) {
  const std::size_t rank = g.size();
  auto n = p.normalized();
  GAElement poly = GAElement::one(rank);
  std::vector<Factor> series;
  for (const auto& f : n.factors) {
    if (f.weight.size() != rank) throw std::invalid_argument("factor weight of the wrong rank");
    if (f.mult > 0) {
      poly = poly * binomial_power(f, rank);
    } else {
      if (dot(f.weight, g) <= 0) throw std::domain_error("non-pointed cone: series coefficient not finite");
      series.push_back(f);
    }
  }
  if (series.empty()) return poly;
  Int pmin = poly.min_grade(g).value_or(0);
  Int sb = bound - std::min<Int>(pmin, 0);
  GAElement acc = GAElement::one(rank).truncated(g, sb);
  for (const auto& f : series) {
    GAElement s;
    Int step = dot(f.weight, g);
    Laurent c = Laurent::monomial(f.q2, f.zeta), ck(1);
    Weight w(rank);
    for (Int k = 0; k * step <= sb; ++k) {
      s.add_term(w, ck);
      ck *= c;
      w += f.weight;
    }
    s = s.truncated(g, sb);
    for (int i = 0; i < -f.mult; ++i) acc = acc * s;
  }
  return (acc * poly).truncated(g, bound);
}

std::map<Weight, Laurent> expansion_set_C(const RootDatumTheta& d) {
  GAElement e = expand_exact(restricted_determinant(d).invert_E().invert_q(), d.rank());
  return e.terms();
}

std::string LFunction::str() const {
  auto fmt = [](const Laurent& l) {
    std::string s = l.str();
    // the variable is X = q^{-s}
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] == 'q') out += "X";
      else out += s[i];
    }
    return out;
  };
  return "(" + fmt(numerator) + ")/(" + fmt(denominator) + ")";
}

LFunction l_function_evaluate(const FactoredPartition& p, const RatVec& parameter) {
  LFunction l{Laurent(1), Laurent(1)};
  for (const auto& f : p.normalized().factors) {
    if (f.q2 % 2) throw std::invalid_argument("half-integral q power in an L-function factor");
    Cyclo c = f.zeta * character_value(f.weight, parameter);
    Laurent factor = Laurent(1) - Laurent::monomial(f.q2, c);
    if (factor.is_zero()) throw std::domain_error("L-function factor is identically zero");
    for (int i = 0; i < std::abs(f.mult); ++i) {
      if (f.mult > 0)
        l.numerator *= factor;
      else
        l.denominator *= factor;
    }
  }
  return l;
}

Weight lowering_grading(const RootDatumTheta& d) { return -d.rho2_dual(); }

bool q_graded_euler_check(const RootDatumTheta& d, Int max_height2) {
  FactoredPartition det = restricted_determinant(d).invert_E();
  Weight g = lowering_grading(d);
  GAElement chi = expand_exact(det, d.rank());
  GAElement part = expand(det.inverted(), g, max_height2);
  GAElement prod = chi * part;
  const auto& tr = *prod.truncation();
  if (tr.bound < max_height2) return false;
  for (const auto& [w, c] : prod.terms())
    if (!(w.is_zero() ? c == Laurent(1) : c.is_zero())) return false;
  return prod.coeff(Weight(d.rank())) == Laurent(1);
}

}  // namespace satake
