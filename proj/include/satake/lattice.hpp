#pragma once

// Integer lattice vectors and matrices, plus the small amount of exact
// linear algebra (rational solves, integer kernels) the engine needs.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace satake {

using Int = std::int64_t;

/// A vector in one of the character or cocharacter lattices.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::size_t n) : c_(n, 0) {}
  Weight(std::initializer_list<Int> xs) : c_(xs) {}
  explicit Weight(std::vector<Int> xs) : c_(std::move(xs)) {}

  std::size_t size() const { return c_.size(); }
  Int operator[](std::size_t i) const { return c_[i]; }
  Int& operator[](std::size_t i) { return c_[i]; }
  const std::vector<Int>& coords() const { return c_; }

  bool is_zero() const;

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  Weight& operator*=(Int k);

  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(Int k, Weight a) { return a *= k; }
  friend Weight operator-(Weight a) { return a *= -1; }

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight& a, const Weight& b) { return a.c_ <=> b.c_; }

  std::string str() const;

 private:
  std::vector<Int> c_;
};

Int dot(const Weight& a, const Weight& b);

using RatVec = std::vector<mpq_class>;

/// <weight, rational cocharacter>
mpq_class pair(const Weight& w, const RatVec& y);

/// Dense integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols, 0) {}
  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows, std::size_t cols);

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  Int operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }
  Int& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }

  Weight apply(const Weight& v) const;
  IntMatrix transpose() const;
  bool is_identity() const;
  std::vector<std::vector<Int>> to_rows() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
  friend auto operator<=>(const IntMatrix& a, const IntMatrix& b) {
    if (auto c = a.r_ <=> b.r_; c != 0) return c;
    if (auto c = a.c_ <=> b.c_; c != 0) return c;
    return a.a_ <=> b.a_;
  }

 private:
  std::size_t r_ = 0, c_ = 0;
  std::vector<Int> a_;
};

/// Order of a square integer matrix (smallest k with M^k = 1), or nullopt if
/// none below the limit.
std::optional<int> matrix_order(const IntMatrix& m, int limit = 1000);

/// Dense rational matrix with Gaussian elimination helpers.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols, 0) {}
  static RatMatrix identity(std::size_t n);
  explicit RatMatrix(const IntMatrix& m);

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  const mpq_class& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }
  mpq_class& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }

  RatVec apply(const RatVec& v) const;
  RatMatrix transpose() const;
  bool is_zero() const;

  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);
  friend RatMatrix operator*(const mpq_class& k, const RatMatrix& a);
  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

  std::optional<RatMatrix> inverse() const;
  std::size_t rank() const;

 private:
  std::size_t r_ = 0, c_ = 0;
  std::vector<mpq_class> a_;
};

/// Solve A x = b over Q. Returns one solution (free variables zero) or nullopt.
std::optional<RatVec> solve_rational(const RatMatrix& a, const RatVec& b);

/// Z-basis (as columns, returned as a list of vectors) of {x in Z^n : A x = 0}.
std::vector<Weight> integer_kernel(const IntMatrix& a);

/// Reduce a rational vector modulo Z^n into [0,1).
RatVec mod_one(const RatVec& v);

Int lcm_of_denominators(const RatVec& v);

std::string rat_str(const mpq_class& q);

}  // namespace satake
