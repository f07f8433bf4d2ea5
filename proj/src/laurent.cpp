#include "satake/laurent.hpp"

#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace satake {

void Laurent::set(int e2, const Cyclo& c) {
  if (c.is_zero())
    t_.erase(e2);
  else
    t_[e2] = c;
}

Laurent Laurent::monomial(int e2, const Cyclo& c) {
  Laurent l;
  l.set(e2, c);
  return l;
}

Cyclo Laurent::coeff(int e2) const {
  auto it = t_.find(e2);
  return it == t_.end() ? Cyclo(0) : it->second;
}

Cyclo Laurent::constant() const {
  if (!is_constant()) throw std::logic_error("Laurent value is not constant: " + str());
  return coeff(0);
}

Laurent& Laurent::operator+=(const Laurent& o) {
  for (const auto& [e, c] : o.t_) {
    auto it = t_.find(e);
    if (it == t_.end()) {
      t_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) t_.erase(it);
    }
  }
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) { return *this += -o; }

Laurent operator-(Laurent a) {
  for (auto& [e, c] : a.t_) c = -c;
  return a;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
  Laurent r;
  for (const auto& [e1, c1] : a.t_)
    for (const auto& [e2, c2] : b.t_) {
      Cyclo p = c1 * c2;
      auto it = r.t_.find(e1 + e2);
      if (it == r.t_.end()) {
        r.t_.emplace(e1 + e2, std::move(p));
      } else {
        it->second += p;
        if (it->second.is_zero()) r.t_.erase(it);
      }
    }
  return r;
}

Laurent& Laurent::operator*=(const Laurent& o) { return *this = *this * o; }

Laurent Laurent::divided_by(const Laurent& d) const {
  if (d.is_zero()) throw std::domain_error("Laurent division by zero");
  if (is_zero()) return {};
  if (d.t_.size() == 1) {
    Laurent r;
    Cyclo inv = d.t_.begin()->second.inverse();
    int sh = d.t_.begin()->first;
    for (const auto& [e, c] : t_) r.t_.emplace(e - sh, c * inv);
    return r;
  }
  // Long division from the top; the quotient's lowest exponent must be
  // low() - d.low().
  Laurent rem = *this, quo;
  const int floor_e = low() - d.low();
  const Cyclo lead_inv = d.t_.rbegin()->second.inverse();
  while (!rem.is_zero()) {
    int e = rem.high() - d.high();
    if (e < floor_e) throw std::domain_error("inexact Laurent division");
    Laurent t = monomial(e, rem.t_.rbegin()->second * lead_inv);
    quo += t;
    rem -= t * d;
  }
  return quo;
}

Laurent Laurent::invert_q() const {
  Laurent r;
  for (const auto& [e, c] : t_) r.t_.emplace(-e, c);
  return r;
}

Laurent Laurent::conj() const {
  Laurent r;
  for (const auto& [e, c] : t_) r.t_.emplace(e, c.conj());
  return r;
}

Cyclo Laurent::at_one() const {
  Cyclo s;
  for (const auto& [e, c] : t_) s += c;
  return s;
}

std::complex<double> Laurent::evaluate(double q0) const {
  std::complex<double> s = 0;
  double rq = std::sqrt(q0);
  for (const auto& [e, c] : t_) s += c.to_complex() * std::pow(rq, e);
  return s;
}

std::optional<mpq_class> Laurent::evaluate_exact(const mpq_class& q0) const {
  if (sgn(q0) == 0) throw std::domain_error("evaluation at q = 0");
  std::optional<mpq_class> root;
  for (const auto& [e, c] : t_) {
    if (!c.is_rational()) return std::nullopt;
    if (e % 2 && !root) {
      if (sgn(q0) < 0) return std::nullopt;
      mpz_class n = q0.get_num(), d = q0.get_den();
      mpz_class rn = sqrt(n), rd = sqrt(d);
      if (rn * rn != n || rd * rd != d) return std::nullopt;
      root = mpq_class(rn, rd);
    }
  }
  mpq_class s = 0;
  for (const auto& [e, c] : t_) {
    mpq_class base = (e % 2) ? *root : q0;
    int k = (e % 2) ? e : e / 2;
    mpq_class p = 1;
    for (int i = 0; i < std::abs(k); ++i) p *= base;
    if (k < 0) p = 1 / p;
    s += c.rational() * p;
  }
  return s;
}

int Laurent::modulus() const {
  int m = 1;
  for (const auto& [e, c] : t_) m = std::lcm(m, c.modulus());
  return m;
}

std::string Laurent::str(int modulus) const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // highest power first
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string cs = c.str(modulus);
    std::string qs;
    if (e != 0) qs = "*q^(" + std::to_string(e) + "/2)";
    // split multi-term cyclotomic coefficients so each term carries the q power
    std::size_t pos = 0;
    while (true) {
      std::size_t next = cs.find(" + ", pos);
      std::string part = cs.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
      if (!first) os << " + ";
      first = false;
      os << part << qs;
      if (next == std::string::npos) break;
      pos = next + 3;
    }
  }
  return os.str();
}

}  // namespace satake
