#pragma once

// Laurent polynomials in a formal q^{1/2} with coefficients in Q(zeta).

#include <complex>
#include <map>
#include <optional>
#include <string>

#include "satake/cyclotomic.hpp"

namespace satake {

/// Keys are doubled exponents of q: the key 1 means q^{1/2}.
class Laurent {
 public:
  Laurent() = default;
  Laurent(long n) { set(0, Cyclo(n)); }  // NOLINT implicit
  Laurent(const mpq_class& r) { set(0, Cyclo(r)); }  // NOLINT implicit
  Laurent(const Cyclo& c) { set(0, c); }  // NOLINT implicit

  /// c * q^{e2/2}
  static Laurent monomial(int e2, const Cyclo& c = Cyclo(1));
  /// q^k
  static Laurent q_pow(int k) { return monomial(2 * k); }

  const std::map<int, Cyclo>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  Cyclo coeff(int e2) const;
  /// Lowest / highest doubled exponent; only for nonzero values.
  int low() const { return t_.begin()->first; }
  int high() const { return t_.rbegin()->first; }
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first == 0); }
  /// Constant term as a field element (throws if not constant).
  Cyclo constant() const;

  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  Laurent& operator*=(const Laurent& o);
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  friend Laurent operator-(Laurent a);
  friend bool operator==(const Laurent&, const Laurent&) = default;

  /// Exact quotient; throws std::domain_error if the division leaves a remainder.
  Laurent divided_by(const Laurent& d) const;

  /// q -> q^{-1}
  Laurent invert_q() const;
  /// Complex conjugation on coefficients.
  Laurent conj() const;
  /// Substitute q = 1.
  Cyclo at_one() const;

  std::complex<double> evaluate(double q0) const;
  /// Exact value at a rational q0 when all coefficients are rational and
  /// every half-integer power has a rational square root.
  std::optional<mpq_class> evaluate_exact(const mpq_class& q0) const;

  /// Terms "c*z^a*q^(e/2)" joined by " + "; coefficients printed in Q(zeta_M)
  /// for the given modulus (0 = each coefficient's own).
  std::string str(int modulus = 0) const;
  /// lcm of coefficient moduli.
  int modulus() const;

 private:
  void set(int e2, const Cyclo& c);
  std::map<int, Cyclo> t_;
};

}  // namespace satake
