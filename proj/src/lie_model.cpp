#include "satake/lie_model.hpp"

#include <algorithm>
#include <stdexcept>

namespace satake {

Cyclo character_value(const Weight& beta, const RatVec& v) {
  mpq_class s = pair(beta, v);
  mpz_class den = s.get_den();
  mpz_class num = s.get_num() % den;
  if (num < 0) num += den;
  return Cyclo::zeta(static_cast<int>(den.get_si()), num.get_si());
}

MonomialAction MonomialAction::identity(std::size_t n_roots, std::size_t cartan_dim) {
  MonomialAction a;
  a.perm.resize(n_roots);
  for (std::size_t k = 0; k < n_roots; ++k) a.perm[k] = static_cast<int>(k);
  a.coeff.assign(n_roots, Cyclo(1));
  a.cartan = RatMatrix::identity(cartan_dim);
  return a;
}

MonomialAction MonomialAction::after(const MonomialAction& o) const {
  MonomialAction r;
  r.perm.resize(perm.size());
  r.coeff.resize(perm.size());
  for (std::size_t k = 0; k < perm.size(); ++k) {
    r.perm[k] = perm[o.perm[k]];
    r.coeff[k] = coeff[o.perm[k]] * o.coeff[k];
  }
  r.cartan = cartan * o.cartan;
  return r;
}

MonomialAction MonomialAction::power(int k) const {
  MonomialAction r = identity(perm.size(), cartan.rows());
  for (int i = 0; i < k; ++i) r = after(r);
  return r;
}

std::vector<int> MonomialAction::orbit(int root) const {
  std::vector<int> o;
  int cur = root;
  do {
    o.push_back(cur);
    cur = perm[cur];
  } while (cur != root);
  return o;
}

Cyclo MonomialAction::orbit_eigenvalue(int root) const {
  Cyclo z(1);
  for (int k : orbit(root)) z *= coeff[k];
  return z;
}

namespace {

RatMatrix unit(std::size_t n, std::size_t i, std::size_t j) {
  RatMatrix m(n, n);
  m(i, j) = 1;
  return m;
}

RatMatrix commutator(const RatMatrix& a, const RatMatrix& b) { return a * b - b * a; }

RatMatrix exp_nilpotent(const RatMatrix& x) {
  RatMatrix sum = RatMatrix::identity(x.rows());
  RatMatrix term = sum;
  for (int k = 1; k <= static_cast<int>(x.rows()) + 1; ++k) {
    term = mpq_class(1, k) * (term * x);
    if (term.is_zero()) return sum;
    sum = sum + term;
  }
  throw std::logic_error("exp of a non-nilpotent matrix");
}

// Simple root vectors of the classical realizations.
std::vector<RatMatrix> simple_vectors(char type, std::size_t rank, std::size_t& size) {
  const std::size_t n = rank;
  std::vector<RatMatrix> e;
  auto chain = [&](std::size_t sz, std::size_t count) {
    for (std::size_t i = 0; i < count; ++i) e.push_back(unit(sz, i, i + 1) - unit(sz, n + i + 1, n + i));
  };
  switch (type) {
    case 'A':
      size = n + 1;
      for (std::size_t i = 0; i < n; ++i) e.push_back(unit(size, i, i + 1));
      break;
    case 'B':
      size = 2 * n + 1;
      chain(size, n - 1);
      e.push_back(unit(size, n - 1, 2 * n) - unit(size, 2 * n, 2 * n - 1));
      break;
    case 'C':
      size = 2 * n;
      chain(size, n - 1);
      e.push_back(unit(size, n - 1, 2 * n - 1));
      break;
    case 'D':
      size = 2 * n;
      chain(size, n - 1);
      e.push_back(unit(size, n - 2, 2 * n - 1) - unit(size, n - 1, 2 * n - 2));
      break;
    case 'G': {
      std::size_t s4 = 0;
      auto d4 = simple_vectors('D', 4, s4);
      size = s4;
      e.push_back(d4[0] + d4[2] + d4[3]);
      e.push_back(d4[1]);
      break;
    }
    default:
      throw std::invalid_argument("no matrix model for this root datum");
  }
  return e;
}

}  // namespace

LieModel::LieModel(const RootDatumTheta& d) : datum_(&d) {
  if (!d.type_letter()) throw std::invalid_argument("Lie model requires a preset root datum");
  r_ = d.semisimple_rank();
  e_ = simple_vectors(d.type_letter(), r_, n_);
  for (std::size_t i = 0; i < r_; ++i) {
    RatMatrix et = e_[i].transpose();
    RatMatrix h0 = commutator(e_[i], et);
    RatMatrix he = commutator(h0, e_[i]);
    // he = k e
    mpq_class k = 0;
    for (std::size_t a = 0; a < n_ && k == 0; ++a)
      for (std::size_t b = 0; b < n_; ++b)
        if (e_[i](a, b) != 0) {
          k = he(a, b) / e_[i](a, b);
          break;
        }
    if (k == 0 || !(he == k * e_[i])) throw std::logic_error("bad simple root vector");
    f_.push_back(mpq_class(2 / k) * et);
    h_.push_back(mpq_class(2 / k) * h0);
  }
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < r_; ++j)
      if (!(commutator(h_[i], e_[j]) == mpq_class(static_cast<long>(d.cartan(i, j))) * e_[j]))
        throw std::logic_error("matrix model does not reproduce the Cartan matrix");

  // Root vectors by chains [e_i, X_{beta - alpha_i}], in order of height.
  const auto& roots = d.roots();
  std::vector<RatMatrix> x(roots.size());
  std::vector<int> order = d.positive_roots();
  auto ht = [&](int k) {
    Int s = 0;
    for (Int c : d.simple_coords(k)) s += c;
    return s;
  };
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return ht(a) < ht(b); });
  std::vector<std::vector<int>> chain(roots.size());
  for (int k : order) {
    auto sp = std::find(d.simple_roots().begin(), d.simple_roots().end(), k);
    if (sp != d.simple_roots().end()) {
      std::size_t i = sp - d.simple_roots().begin();
      x[k] = e_[i];
      x[d.negative_of(k)] = f_[i];
      chain[k] = {static_cast<int>(i)};
      continue;
    }
    bool done = false;
    for (std::size_t i = 0; i < r_ && !done; ++i) {
      auto prev = d.root_index(roots[k] - roots[d.simple_roots()[i]]);
      if (!prev || !d.is_positive(*prev)) continue;
      x[k] = commutator(e_[i], x[*prev]);
      x[d.negative_of(k)] = commutator(f_[i], x[d.negative_of(*prev)]);
      chain[k] = chain[*prev];
      chain[k].push_back(static_cast<int>(i));
      done = true;
    }
    if (!done) throw std::logic_error("root without a chain");
  }
  for (std::size_t i = 0; i < r_; ++i) basis_.push_back(h_[i]);
  for (const auto& m : x) {
    if (m.is_zero()) throw std::logic_error("zero root vector");
    basis_.push_back(m);
  }

  // Pivot entries for decomposition.
  const std::size_t N = basis_.size(), M = n_ * n_;
  {
    RatMatrix rows(N, M);
    for (std::size_t b = 0; b < N; ++b)
      for (std::size_t p = 0; p < M; ++p) rows(b, p) = basis_[b](p / n_, p % n_);
    std::size_t row = 0;
    for (std::size_t col = 0; col < M && row < N; ++col) {
      std::size_t piv = row;
      while (piv < N && sgn(rows(piv, col)) == 0) ++piv;
      if (piv == N) continue;
      for (std::size_t j = 0; j < M; ++j) std::swap(rows(piv, j), rows(row, j));
      for (std::size_t i = 0; i < N; ++i) {
        if (i == row || sgn(rows(i, col)) == 0) continue;
        mpq_class fct = rows(i, col) / rows(row, col);
        for (std::size_t j = col; j < M; ++j) rows(i, j) -= fct * rows(row, j);
      }
      pivots_.push_back(col);
      ++row;
    }
    if (pivots_.size() != N) throw std::logic_error("basis matrices are dependent");
    RatMatrix pt(N, N);
    for (std::size_t b = 0; b < N; ++b)
      for (std::size_t j = 0; j < N; ++j) pt(j, b) = basis_[b](pivots_[j] / n_, pivots_[j] % n_);
    pivot_inverse_ = *pt.inverse();
  }

  // Pinned theta: permute generator indices along each chain.
  {
    std::vector<RatMatrix> img(N);
    for (std::size_t i = 0; i < r_; ++i) img[i] = h_[d.simple_perm(static_cast<int>(i))];
    for (int k : d.positive_roots()) {
      const auto& c = chain[k];
      RatMatrix p = e_[d.simple_perm(c[0])], m = f_[d.simple_perm(c[0])];
      for (std::size_t t = 1; t < c.size(); ++t) {
        p = commutator(e_[d.simple_perm(c[t])], p);
        m = commutator(f_[d.simple_perm(c[t])], m);
      }
      img[root_basis(k)] = p;
      img[root_basis(d.negative_of(k))] = m;
    }
    theta_ = read_monomial(img);
  }
  for (std::size_t i = 0; i < r_; ++i) {
    RatMatrix a = exp_nilpotent(e_[i]), b = exp_nilpotent(-1 * f_[i]);
    RatMatrix ai = exp_nilpotent(-1 * e_[i]), bi = exp_nilpotent(f_[i]);
    RatMatrix n = a * b * a, ninv = ai * bi * ai;
    std::vector<RatMatrix> plus(N), minus(N);
    for (std::size_t t = 0; t < N; ++t) {
      plus[t] = n * basis_[t] * ninv;
      minus[t] = ninv * basis_[t] * n;
    }
    tits_plus_.push_back(read_monomial(plus));
    tits_minus_.push_back(read_monomial(minus));
  }
}

RatVec LieModel::coordinates(const RatMatrix& m) const {
  const std::size_t N = basis_.size();
  RatVec v(N);
  for (std::size_t j = 0; j < N; ++j) v[j] = m(pivots_[j] / n_, pivots_[j] % n_);
  RatVec c = pivot_inverse_.apply(v);
  RatMatrix back(n_, n_);
  for (std::size_t b = 0; b < N; ++b)
    if (sgn(c[b]) != 0) back = back + c[b] * basis_[b];
  if (!(back == m)) throw std::logic_error("matrix is not in the Lie algebra");
  return c;
}

MonomialAction LieModel::read_monomial(const std::vector<RatMatrix>& images) const {
  const std::size_t N = basis_.size();
  const std::size_t nroots = N - r_;
  MonomialAction a;
  a.perm.assign(nroots, -1);
  a.coeff.assign(nroots, Cyclo(0));
  a.cartan = RatMatrix(r_, r_);
  for (std::size_t b = 0; b < N; ++b) {
    RatVec c = coordinates(images[b]);
    if (b < r_) {
      for (std::size_t j = 0; j < N; ++j) {
        if (sgn(c[j]) == 0) continue;
        if (j >= r_) throw std::logic_error("Cartan element mapped outside the Cartan");
        a.cartan(j, b) = c[j];
      }
      continue;
    }
    int hit = -1;
    for (std::size_t j = 0; j < N; ++j) {
      if (sgn(c[j]) == 0) continue;
      if (j < r_ || hit >= 0) throw std::logic_error("action is not monomial on root vectors");
      hit = static_cast<int>(j - r_);
      a.coeff[b - r_] = Cyclo(c[j]);
    }
    if (hit < 0) throw std::logic_error("root vector mapped to zero");
    a.perm[b - r_] = hit;
  }
  return a;
}

const MonomialAction& LieModel::tits(int simple_pos, int sign) const {
  return sign > 0 ? tits_plus_.at(simple_pos) : tits_minus_.at(simple_pos);
}

MonomialAction LieModel::torus(const RatVec& v) const {
  MonomialAction a = MonomialAction::identity(datum_->roots().size(), r_);
  for (std::size_t k = 0; k < datum_->roots().size(); ++k) a.coeff[k] = character_value(datum_->roots()[k], v);
  return a;
}

MonomialAction LieModel::adjoint(const NormalizerElement& n) const {
  MonomialAction a = n.torus.empty() ? MonomialAction::identity(datum_->roots().size(), r_) : torus(n.torus);
  for (const auto& [i, s] : n.word) a = a.after(tits(i, s));
  return a;
}

MonomialAction LieModel::twisted(const NormalizerElement& n) const { return adjoint(n).after(theta_); }

RatVec LieModel::bracket(const RatVec& x, const RatVec& y) const {
  RatMatrix a(n_, n_), b(n_, n_);
  for (std::size_t t = 0; t < basis_.size(); ++t) {
    if (sgn(x[t]) != 0) a = a + x[t] * basis_[t];
    if (sgn(y[t]) != 0) b = b + y[t] * basis_[t];
  }
  return coordinates(commutator(a, b));
}

}  // namespace satake
