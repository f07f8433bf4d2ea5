#include "satake/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "satake/lattice.hpp"

namespace satake {

namespace {

std::vector<long> poly_div_exact(std::vector<long> a, const std::vector<long>& b) {
  // b monic
  std::vector<long> q(a.size() - b.size() + 1, 0);
  for (std::size_t i = q.size(); i-- > 0;) {
    long c = a[i + b.size() - 1];
    q[i] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[i + j] -= c * b[j];
  }
  return q;
}

}  // namespace

const std::vector<long>& cyclotomic_poly(int m) {
  static std::mutex mu;
  static std::map<int, std::vector<long>> cache;
  if (m < 1) throw std::invalid_argument("cyclotomic modulus must be positive");
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  // x^m - 1 divided by Phi_d for proper divisors d.
  std::vector<long> p(m + 1, 0);
  p[0] = -1;
  p[m] = 1;
  for (int d = 1; d < m; ++d) {
    if (m % d) continue;
    auto jt = cache.find(d);
    std::vector<long> phi_d;
    if (jt == cache.end()) {
      // compute recursively without holding on to the lock semantics: the
      // recursion only touches smaller moduli, computed inline here
      std::vector<long> pd(d + 1, 0);
      pd[0] = -1;
      pd[d] = 1;
      for (int e = 1; e < d; ++e)
        if (d % e == 0) pd = poly_div_exact(pd, cache.at(e));
      cache[d] = pd;
      phi_d = pd;
    } else {
      phi_d = jt->second;
    }
    p = poly_div_exact(p, phi_d);
  }
  return cache[m] = p;
}

int euler_phi(int m) {
  int r = m;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p) continue;
    while (m % p == 0) m /= p;
    r -= r / p;
  }
  if (m > 1) r -= r / m;
  return r;
}

Cyclo::Cyclo(int m, std::vector<mpq_class> c) : m_(m), c_(std::move(c)) { normalize(); }

std::vector<mpq_class> Cyclo::reduce(int m, std::vector<mpq_class> poly) {
  const auto& phi = cyclotomic_poly(m);
  std::size_t deg = phi.size() - 1;
  for (std::size_t i = poly.size(); i-- > deg;) {
    if (sgn(poly[i]) == 0) continue;
    mpq_class c = poly[i];
    for (std::size_t j = 0; j <= deg; ++j)
      if (phi[j]) poly[i - deg + j] -= c * phi[j];
  }
  poly.resize(deg, 0);
  return poly;
}

void Cyclo::normalize() {
  if (m_ <= 2) {
    // zeta_2 = -1 is rational
    if (m_ == 2) {
      c_ = reduce(2, c_);
    }
    m_ = 1;
    if (c_.empty()) c_.push_back(0);
    c_.resize(1);
    return;
  }
  bool rational = true;
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (sgn(c_[i]) != 0) rational = false;
  if (rational) {
    mpq_class r = c_.empty() ? mpq_class(0) : c_[0];
    m_ = 1;
    c_ = {r};
  }
}

Cyclo Cyclo::zeta(int m, long k) {
  if (m < 1) throw std::invalid_argument("zeta: modulus must be positive");
  long e = ((k % m) + m) % m;
  std::vector<mpq_class> p(e + 1, 0);
  p[e] = 1;
  return Cyclo(m, reduce(m, std::move(p)));
}

bool Cyclo::is_zero() const {
  for (const auto& x : c_)
    if (sgn(x) != 0) return false;
  return true;
}

const mpq_class& Cyclo::rational() const {
  if (m_ != 1) throw std::logic_error("cyclotomic element is not rational");
  return c_[0];
}

Cyclo Cyclo::lifted(int M) const {
  if (M % m_) throw std::invalid_argument("lift: modulus does not divide target");
  if (M == m_) return *this;
  int step = M / m_;
  std::vector<mpq_class> p((c_.size() - 1) * step + 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) p[i * step] = c_[i];
  Cyclo r;
  r.m_ = M;
  r.c_ = reduce(M, std::move(p));
  return r;
}

Cyclo& Cyclo::operator+=(const Cyclo& o) {
  int M = std::lcm(m_, o.m_);
  Cyclo a = lifted(M), b = o.lifted(M);
  for (std::size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
  a.normalize();
  return *this = std::move(a);
}

Cyclo& Cyclo::operator-=(const Cyclo& o) { return *this += -o; }

Cyclo operator-(Cyclo a) {
  for (auto& x : a.c_) x = -x;
  return a;
}

Cyclo& Cyclo::operator*=(const Cyclo& o) {
  if (o.m_ == 1) {
    for (auto& x : c_) x *= o.c_[0];
    normalize();
    return *this;
  }
  if (m_ == 1) {
    mpq_class k = c_[0];
    *this = o;
    for (auto& x : c_) x *= k;
    normalize();
    return *this;
  }
  int M = std::lcm(m_, o.m_);
  Cyclo a = lifted(M), b = o.lifted(M);
  std::vector<mpq_class> p(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      if (sgn(b.c_[j]) != 0) p[i + j] += a.c_[i] * b.c_[j];
  }
  return *this = Cyclo(M, reduce(M, std::move(p)));
}

Cyclo Cyclo::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero in Q(zeta)");
  if (m_ == 1) return Cyclo(mpq_class(1 / c_[0]));
  // Solve (multiplication-by-this) x = 1.
  std::size_t n = c_.size();
  RatMatrix mul(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    Cyclo col = *this * zeta(m_, static_cast<long>(j));
    Cyclo full = col.lifted(m_);
    for (std::size_t i = 0; i < n; ++i) mul(i, j) = full.c_[i];
  }
  RatVec rhs(n, 0);
  rhs[0] = 1;
  auto x = solve_rational(mul, rhs);
  if (!x) throw std::domain_error("singular element in Q(zeta)");
  return Cyclo(m_, *x);
}

Cyclo Cyclo::conj() const {
  if (m_ == 1) return *this;
  Cyclo r;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (sgn(c_[i]) != 0) r += Cyclo(c_[i]) * zeta(m_, -static_cast<long>(i));
  return r;
}

bool operator==(const Cyclo& a, const Cyclo& b) {
  if (a.m_ == b.m_) return a.c_ == b.c_;
  int M = std::lcm(a.m_, b.m_);
  return a.lifted(M).c_ == b.lifted(M).c_;
}

std::complex<double> Cyclo::to_complex() const {
  std::complex<double> s = 0;
  const double two_pi = 6.283185307179586476925286766559;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) == 0) continue;
    double ang = two_pi * static_cast<double>(i) / m_;
    s += c_[i].get_d() * std::complex<double>(std::cos(ang), std::sin(ang));
  }
  return s;
}

std::string Cyclo::str(int modulus) const {
  if (modulus > 0 && modulus != m_ && m_ != 1) return lifted(modulus).str_raw();
  return str_raw();
}

std::string Cyclo::str_raw() const {
  if (m_ == 1) return c_[0].get_str();
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << c_[i].get_str();
    if (i > 0) os << "*z^" << i;
  }
  return first ? "0" : os.str();
}

}  // namespace satake
