#pragma once

// Exact elements of the cyclotomic field Q(zeta_m).

#include <complex>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace satake {

/// Integer coefficients of the m-th cyclotomic polynomial, low degree first.
const std::vector<long>& cyclotomic_poly(int m);

int euler_phi(int m);

/// An element of Q(zeta_m), stored in the power basis 1, z, ..., z^{phi(m)-1}.
/// Mixed-modulus arithmetic lifts both sides to the lcm.
class Cyclo {
 public:
  Cyclo() : m_(1), c_{0} {}
  Cyclo(long n) : m_(1), c_{mpq_class(n)} {}  // NOLINT implicit
  Cyclo(const mpq_class& r) : m_(1), c_{r} {}  // NOLINT implicit

  /// zeta_m^k
  static Cyclo zeta(int m, long k);

  int modulus() const { return m_; }
  const std::vector<mpq_class>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const { return m_ == 1; }
  /// Valid only when is_rational().
  const mpq_class& rational() const;

  /// Representation of the same element in Q(zeta_M), m | M.
  Cyclo lifted(int M) const;

  Cyclo& operator+=(const Cyclo& o);
  Cyclo& operator-=(const Cyclo& o);
  Cyclo& operator*=(const Cyclo& o);
  friend Cyclo operator+(Cyclo a, const Cyclo& b) { return a += b; }
  friend Cyclo operator-(Cyclo a, const Cyclo& b) { return a -= b; }
  friend Cyclo operator*(Cyclo a, const Cyclo& b) { return a *= b; }
  friend Cyclo operator-(Cyclo a);

  /// Multiplicative inverse; throws std::domain_error on zero.
  Cyclo inverse() const;
  friend Cyclo operator/(const Cyclo& a, const Cyclo& b) { return a * b.inverse(); }

  /// Complex conjugation (zeta -> zeta^{-1}).
  Cyclo conj() const;

  friend bool operator==(const Cyclo& a, const Cyclo& b);

  std::complex<double> to_complex() const;

  /// Sum of terms "c*z^a" with z = zeta_M, where M is the given modulus
  /// (a multiple of modulus()) or modulus() itself when 0.
  std::string str(int modulus = 0) const;

 private:
  Cyclo(int m, std::vector<mpq_class> c);
  void normalize();
  std::string str_raw() const;
  static std::vector<mpq_class> reduce(int m, std::vector<mpq_class> poly);

  int m_;
  std::vector<mpq_class> c_;
};

}  // namespace satake
