#include "satake/spherical.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace satake {

// ---- CoeffMatrix

CoeffMatrix CoeffMatrix::identity(const std::vector<Weight>& index) {
  CoeffMatrix m(index, index);
  for (std::size_t i = 0; i < index.size(); ++i) m.set(i, i, Laurent(1));
  return m;
}

Laurent CoeffMatrix::at(std::size_t i, std::size_t j) const {
  auto it = entries.find({i, j});
  return it == entries.end() ? Laurent() : it->second;
}

Laurent CoeffMatrix::get(const Weight& row, const Weight& col) const {
  auto i = row_of(row), j = col_of(col);
  if (!i || !j) return Laurent();
  return at(*i, *j);
}

void CoeffMatrix::set(std::size_t i, std::size_t j, const Laurent& v) {
  if (v.is_zero())
    entries.erase({i, j});
  else
    entries[{i, j}] = v;
}

namespace {
std::optional<std::size_t> position(const std::vector<Weight>& v, const Weight& w) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] == w) return i;
  return std::nullopt;
}
}  // namespace

std::optional<std::size_t> CoeffMatrix::row_of(const Weight& w) const { return position(rows, w); }
std::optional<std::size_t> CoeffMatrix::col_of(const Weight& w) const { return position(cols, w); }

CoeffMatrix operator*(const CoeffMatrix& a, const CoeffMatrix& b) {
  if (a.cols != b.rows) throw std::invalid_argument("matrix index sets do not match");
  CoeffMatrix r(a.rows, b.cols);
  std::map<std::size_t, std::vector<std::pair<std::size_t, const Laurent*>>> brow;
  for (const auto& [ij, v] : b.entries) brow[ij.first].push_back({ij.second, &v});
  std::map<std::pair<std::size_t, std::size_t>, Laurent> acc;
  for (const auto& [ij, v] : a.entries) {
    auto it = brow.find(ij.second);
    if (it == brow.end()) continue;
    for (const auto& [k, w] : it->second) acc[{ij.first, k}] += v * *w;
  }
  for (const auto& [ij, v] : acc) r.set(ij.first, ij.second, v);
  return r;
}

bool operator==(const CoeffMatrix& a, const CoeffMatrix& b) {
  return a.rows == b.rows && a.cols == b.cols && a.entries == b.entries;
}

bool CoeffMatrix::is_identity() const {
  if (rows != cols) return false;
  for (const auto& [ij, v] : entries)
    if (ij.first != ij.second || !(v == Laurent(1))) return false;
  return entries.size() == rows.size();
}

// ---- index sets

std::vector<Weight> index_set(const RootDatumTheta& d, Int max_height2) { return d.dominant_weights(max_height2); }

void require_saturated(const RootDatumTheta& d, const std::vector<Weight>& index) {
  std::set<Weight> s(index.begin(), index.end());
  if (s.size() != index.size()) throw std::invalid_argument("index set has repeated weights");
  for (const auto& l : index) {
    if (!d.in_Y(l) || !d.is_dominant(l)) throw std::invalid_argument("index set member " + l.str() + " is not dominant");
    for (const auto& m : d.dominant_below(l))
      if (!s.count(m))
        throw std::invalid_argument("index set is not saturated: " + m.str() + " lies below " + l.str());
  }
}

// ---- characters

namespace {

FactoredPartition lowering_partition(const RootDatumTheta& d, std::optional<QSign> s) {
  // P(E^{-1}, q^{+-1}) or P(E^{-1}, 1) as an inverse determinant
  FactoredPartition det = restricted_determinant(d).invert_E();
  if (!s)
    det = det.at_q_one();
  else if (*s == QSign::QInverse)
    det = det.invert_q();
  return det.inverted();
}

GAElement character_series(const RootDatumTheta& d, const Weight& lambda, std::optional<QSign> s, Int bound) {
  if (!d.in_Y(lambda) || !d.is_dominant(lambda)) throw std::invalid_argument("weight " + lambda.str() + " is not dominant");
  Weight g = lowering_grading(d);
  GAElement j = alt_symmetrize_J(d, GAElement::monomial(lambda));
  // J(e^lambda) has its top term at grade -height2(lambda)
  Int shift = std::max<Int>(0, d.height2(lambda));
  GAElement p = expand(lowering_partition(d, s), g, bound + shift);
  return (j * p).truncated(g, bound);
}

}  // namespace

GAElement tau(const RootDatumTheta& d, const Weight& lambda) {
  const Int h = d.height2(lambda);
  for (Int extra = 2; extra <= 64; extra *= 4) {
    GAElement t = character_series(d, lambda, std::nullopt, h + extra);
    bool clean = true;
    for (const auto& [w, c] : t.terms())
      if (dot(w, lowering_grading(d)) > h) clean = false;
    if (!clean) continue;
    GAElement r = t.as_exact();
    if (!is_weyl_invariant(d, r)) throw std::logic_error("tau is not W-invariant");
    return r;
  }
  throw std::runtime_error("tau: truncation region too small for " + lambda.str());
}

GAElement tau_q_series(const RootDatumTheta& d, const Weight& lambda, QSign s, Int bound) {
  return character_series(d, lambda, s, bound);
}

Laurent tau_q_coeff(const RootDatumTheta& d, const Weight& lambda, const Weight& mu, QSign s) {
  if (!d.in_Y(mu) || !d.is_dominant(mu)) throw std::invalid_argument("weight " + mu.str() + " is not dominant");
  Int bound = std::max(-d.height2(mu), -d.height2(lambda));
  return tau_q_series(d, lambda, s, bound).coeff(mu);
}

CoeffMatrix weight_mult_matrix(const RootDatumTheta& d, const std::vector<Weight>& index) {
  require_saturated(d, index);
  CoeffMatrix m(index, index);
  for (std::size_t i = 0; i < index.size(); ++i) {
    GAElement t = tau(d, index[i]);
    for (std::size_t j = 0; j < index.size(); ++j) m.set(i, j, t.coeff(index[j]));
  }
  return m;
}

CoeffMatrix van_leeuwen_inverse(const RootDatumTheta& d, const std::vector<Weight>& index) {
  require_saturated(d, index);
  CoeffMatrix n(index, index);
  const auto& W = d.weyl();
  for (std::size_t i = 0; i < index.size(); ++i) {
    // cosets W / W_{S(lambda)} correspond to the distinct images w(lambda)
    std::set<Weight> orbit;
    for (const auto& w : W.elements) orbit.insert(w.apply(index[i]));
    std::map<Weight, Int> row;
    for (const auto& nu : orbit)
      for (std::size_t x = 0; x < W.size(); ++x) {
        Weight y = d.dot_action(static_cast<int>(x), nu);
        if (d.is_dominant(y) && d.chamber_of(nu)) row[y] += W.length[x] % 2 ? -1 : 1;
      }
    for (const auto& [mu, c] : row) {
      if (c == 0) continue;
      auto j = n.col_of(mu);
      if (!j) throw std::logic_error("van Leeuwen inverse leaves the index set");
      n.set(i, *j, Laurent(static_cast<long>(c)));
    }
  }
  return n;
}

// ---- Poincare polynomials

Laurent q_poincare(const RootDatumTheta& d, const std::vector<int>& S) {
  Laurent r;
  for (int w : d.parabolic(S)) r += Laurent::q_pow(-d.weyl().length_abs[w]);
  return r;
}

Laurent q_poincare(const RootDatumTheta& d) {
  std::vector<int> all(d.simple_orbits().size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  return q_poincare(d, all);
}

Laurent c_constant(const RootDatumTheta& d, const Weight& mu) {
  if (!d.in_Y(mu) || !d.is_dominant(mu)) throw std::invalid_argument("weight " + mu.str() + " is not dominant");
  Laurent r = Laurent::monomial(static_cast<int>(d.height2(mu))) * q_poincare(d);
  return r.divided_by(q_poincare(d, d.stabilizer_orbits(mu)));
}

// ---- geometric Satake

std::map<Weight, Laurent> geometric_satake_row(const RootDatumTheta& d, const Weight& lambda) {
  if (!d.in_Y(lambda) || !d.is_dominant(lambda)) throw std::invalid_argument("weight " + lambda.str() + " is not dominant");
  std::map<Weight, Laurent> sum;
  for (const auto& [mu, p] : expansion_set_C(d)) {
    Weight nu = lambda + mu;
    auto x = d.chamber_of(nu);
    if (!x) continue;
    Laurent sign(d.weyl().length[*x] % 2 ? -1 : 1);
    sum[d.dot_action(*x, nu)] += sign * p;
  }
  Laurent pre = Laurent::monomial(static_cast<int>(d.height2(lambda)));
  Laurent qs = q_poincare(d, d.stabilizer_orbits(lambda));
  std::map<Weight, Laurent> row;
  for (const auto& [nu, c] : sum) {
    if (c.is_zero()) continue;
    row[nu] = (pre * c).divided_by(qs);
  }
  return row;
}

GAElement macdonald_fhat(const RootDatumTheta& d, const Weight& lambda) {
  GAElement r;
  for (const auto& [nu, c] : geometric_satake_row(d, lambda)) r += c * tau(d, nu);
  return r;
}

CoeffMatrix satake_matrix(const RootDatumTheta& d, const std::vector<Weight>& index) {
  require_saturated(d, index);
  CoeffMatrix s(index, index);
  for (std::size_t i = 0; i < index.size(); ++i) {
    GAElement f = macdonald_fhat(d, index[i]);
    for (std::size_t j = 0; j < index.size(); ++j) s.set(i, j, f.coeff(index[j]));
  }
  return s;
}

CoeffMatrix geometric_satake(const RootDatumTheta& d, const std::vector<Weight>& index) {
  require_saturated(d, index);
  CoeffMatrix g(index, index);
  for (std::size_t i = 0; i < index.size(); ++i)
    for (const auto& [nu, c] : geometric_satake_row(d, index[i])) {
      auto j = g.col_of(nu);
      if (!j) throw std::logic_error("geometric Satake row leaves the index set");
      g.set(i, *j, c);
    }
  if (!(satake_matrix(d, index) * van_leeuwen_inverse(d, index) == g))
    throw std::logic_error("geometric Satake matrix disagrees with s * n");
  return g;
}

CoeffMatrix kato_lusztig_matrix(const RootDatumTheta& d, const std::vector<Weight>& index) {
  require_saturated(d, index);
  CoeffMatrix t(index, index);
  for (std::size_t i = 0; i < index.size(); ++i) {
    GAElement s = tau_q_series(d, index[i], QSign::QInverse, 0);
    for (std::size_t j = 0; j < index.size(); ++j) {
      const Weight& mu = index[j];
      t.set(i, j, s.coeff(mu) * Laurent::monomial(-static_cast<int>(d.height2(mu))));
    }
  }
  return t;
}

// ---- numerics

namespace {

std::complex<double> character_at(const Weight& w, const Parameter& s) {
  if (s.size() != w.size()) throw std::invalid_argument("parameter has the wrong rank");
  std::complex<double> r = 1;
  for (std::size_t i = 0; i < w.size(); ++i) r *= std::pow(s[i], static_cast<double>(w[i]));
  return r;
}

using NumSeries = std::map<Weight, std::complex<double>>;

NumSeries multiply(const NumSeries& a, const NumSeries& b, const RootDatumTheta& d, Int hb) {
  NumSeries r;
  for (const auto& [wa, ca] : a)
    for (const auto& [wb, cb] : b) {
      Weight w = wa + wb;
      if (std::abs(d.height2(w)) > hb) continue;
      r[w] += ca * cb;
    }
  for (auto it = r.begin(); it != r.end();) it = std::abs(it->second) < 1e-22 ? r.erase(it) : std::next(it);
  return r;
}

}  // namespace

std::complex<double> evaluate_numeric(const GAElement& f, const Parameter& s, double q0) {
  if (!f.is_exact()) throw std::logic_error("numeric evaluation of a truncated series");
  std::complex<double> r = 0;
  for (const auto& [w, c] : f.terms()) r += c.evaluate(q0) * character_at(w, s);
  return r;
}

std::complex<double> WeylSum::evaluate(const Parameter& s, double q0) const {
  const auto& d = *datum;
  std::complex<double> total = 0;
  for (const auto& w : d.weyl().elements) {
    std::complex<double> term = character_at(w.apply(lambda), s);
    for (const auto& r : d.restricted_roots())
      for (const auto& f : r.d_factors) {
        std::complex<double> e = character_at(-w.apply(f.weight), s), z = f.zeta.to_complex();
        std::complex<double> num = 1.0 - z * std::pow(q0, -f.q2 / 2.0) * e;
        std::complex<double> den = 1.0 - z * e;
        if (std::abs(den) < 1e-12) throw std::domain_error("parameter lies on a pole of the spherical function");
        term *= std::pow(num / den, static_cast<double>(f.mult));
      }
    total += term;
  }
  return total * numerator.evaluate(q0) / denominator.evaluate(q0);
}

WeylSum spherical_gamma(const RootDatumTheta& d, const Weight& lambda) {
  if (!d.in_Y(lambda) || !d.is_dominant(lambda)) throw std::invalid_argument("weight " + lambda.str() + " is not dominant");
  return WeylSum{&d, lambda, Laurent::monomial(-static_cast<int>(d.height2(lambda))), q_poincare(d)};
}

WeylSum macdonald_sum(const RootDatumTheta& d, const Weight& lambda) {
  if (!d.in_Y(lambda) || !d.is_dominant(lambda)) throw std::invalid_argument("weight " + lambda.str() + " is not dominant");
  return WeylSum{&d, lambda, Laurent::monomial(static_cast<int>(d.height2(lambda))),
                 q_poincare(d, d.stabilizer_orbits(lambda))};
}

std::complex<double> plancherel_inner(const RootDatumTheta& d, const GAElement& f, const GAElement& g, double q0,
                                      Int height_bound) {
  if (!(q0 > 1)) throw std::invalid_argument("Plancherel pairing needs q > 1");
  if (height_bound <= 0) {
    Int top = 0;
    for (const auto& r : d.restricted_roots()) top = std::max(top, d.height2(r.vector));
    height_bound = 16 * top;
  }
  // density prod_{+-alpha} (1 - z e^N) / (1 - z q^{-b} e^N)
  NumSeries density{{Weight(d.rank()), 1.0}};
  for (const auto& r : d.restricted_roots())
    for (const auto& f0 : r.d_factors)
      for (int sgn : {1, -1}) {
        if (f0.mult != 1) throw std::logic_error("restricted d-factors are expected to be simple");
        Weight n = sgn * f0.weight;
        std::complex<double> z = f0.zeta.to_complex();
        if (sgn > 0) z = std::conj(z);
        NumSeries num{{Weight(d.rank()), 1.0}, {n, -z}};
        NumSeries geo;
        std::complex<double> c = z * std::pow(q0, -f0.q2 / 2.0), ck = 1;
        Weight w(d.rank());
        for (int k = 0; std::abs(ck) > 1e-16 && std::abs(d.height2(w)) <= height_bound; ++k) {
          geo[w] += ck;
          ck *= c;
          w += n;
        }
        density = multiply(multiply(density, num, d, height_bound), geo, d, height_bound);
      }
  std::complex<double> sum = 0;
  for (const auto& [wa, ca] : f.terms())
    for (const auto& [wb, cb] : g.terms()) {
      // e^{wa} conj(e^{wb}) pairs with the density term at wb - wa
      auto it = density.find(wb - wa);
      if (it != density.end()) sum += ca.evaluate(q0) * std::conj(cb.evaluate(q0)) * it->second;
    }
  return sum * q_poincare(d).evaluate(q0) / static_cast<double>(d.weyl().size());
}

std::complex<double> plancherel_pair(const RootDatumTheta& d, const Weight& lambda, const Weight& mu, double q0,
                                     Int height_bound) {
  return plancherel_inner(d, macdonald_fhat(d, lambda), macdonald_fhat(d, mu), q0, height_bound);
}

}  // namespace satake
