#include "satake/lattice.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace satake {

bool Weight::is_zero() const {
  for (Int x : c_)
    if (x != 0) return false;
  return true;
}

Weight& Weight::operator+=(const Weight& o) {
  if (o.size() != size()) throw std::invalid_argument("weight size mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  if (o.size() != size()) throw std::invalid_argument("weight size mismatch");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Weight& Weight::operator*=(Int k) {
  for (Int& x : c_) x *= k;
  return *this;
}

std::string Weight::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << c_[i];
  os << ']';
  return os.str();
}

Int dot(const Weight& a, const Weight& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

mpq_class pair(const Weight& w, const RatVec& y) {
  if (w.size() != y.size()) throw std::invalid_argument("pair: size mismatch");
  mpq_class s = 0;
  for (std::size_t i = 0; i < w.size(); ++i) s += mpq_class(static_cast<long>(w[i])) * y[i];
  return s;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Weight IntMatrix::apply(const Weight& v) const {
  if (v.size() != c_) throw std::invalid_argument("matrix/vector size mismatch");
  Weight out(r_);
  for (std::size_t i = 0; i < r_; ++i) {
    Int s = 0;
    for (std::size_t j = 0; j < c_; ++j) s += a_[i * c_ + j] * v[j];
    out[i] = s;
  }
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(c_, r_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool IntMatrix::is_identity() const {
  if (r_ != c_) return false;
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j)
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

std::vector<std::vector<Int>> IntMatrix::to_rows() const {
  std::vector<std::vector<Int>> out(r_, std::vector<Int>(c_));
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j) out[i][j] = (*this)(i, j);
  return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.c_ != b.r_) throw std::invalid_argument("matrix product size mismatch");
  IntMatrix m(a.r_, b.c_);
  for (std::size_t i = 0; i < a.r_; ++i)
    for (std::size_t k = 0; k < a.c_; ++k) {
      Int x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.c_; ++j) m(i, j) += x * b(k, j);
    }
  return m;
}

std::optional<int> matrix_order(const IntMatrix& m, int limit) {
  IntMatrix p = m;
  for (int k = 1; k <= limit; ++k) {
    if (p.is_identity()) return k;
    p = p * m;
  }
  return std::nullopt;
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix::RatMatrix(const IntMatrix& m) : r_(m.rows()), c_(m.cols()), a_(r_ * c_) {
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j) a_[i * c_ + j] = static_cast<long>(m(i, j));
}

RatVec RatMatrix::apply(const RatVec& v) const {
  if (v.size() != c_) throw std::invalid_argument("matrix/vector size mismatch");
  RatVec out(r_, 0);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j)
      if (sgn(a_[i * c_ + j]) != 0) out[i] += a_[i * c_ + j] * v[j];
  return out;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(c_, r_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool RatMatrix::is_zero() const {
  for (const auto& x : a_)
    if (sgn(x) != 0) return false;
  return true;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.c_ != b.r_) throw std::invalid_argument("matrix product size mismatch");
  RatMatrix m(a.r_, b.c_);
  for (std::size_t i = 0; i < a.r_; ++i)
    for (std::size_t k = 0; k < a.c_; ++k) {
      const mpq_class& x = a(i, k);
      if (sgn(x) == 0) continue;
      for (std::size_t j = 0; j < b.c_; ++j)
        if (sgn(b(k, j)) != 0) m(i, j) += x * b(k, j);
    }
  return m;
}

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
  if (a.r_ != b.r_ || a.c_ != b.c_) throw std::invalid_argument("matrix sum size mismatch");
  RatMatrix m = a;
  for (std::size_t i = 0; i < m.a_.size(); ++i) m.a_[i] += b.a_[i];
  return m;
}

RatMatrix operator-(const RatMatrix& a, const RatMatrix& b) {
  if (a.r_ != b.r_ || a.c_ != b.c_) throw std::invalid_argument("matrix sum size mismatch");
  RatMatrix m = a;
  for (std::size_t i = 0; i < m.a_.size(); ++i) m.a_[i] -= b.a_[i];
  return m;
}

RatMatrix operator*(const mpq_class& k, const RatMatrix& a) {
  RatMatrix m = a;
  for (auto& x : m.a_) x *= k;
  return m;
}

namespace {

// Row-reduce [a | b] in place; returns pivot columns.
std::vector<std::size_t> row_reduce(RatMatrix& a, std::vector<RatVec>* rhs) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t p = row;
    while (p < a.rows() && sgn(a(p, col)) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != row) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(row, j));
      if (rhs)
        for (auto& r : *rhs) std::swap(r[p], r[row]);
    }
    mpq_class inv = 1 / a(row, col);
    for (std::size_t j = 0; j < a.cols(); ++j) a(row, j) *= inv;
    if (rhs)
      for (auto& r : *rhs) r[row] *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || sgn(a(i, col)) == 0) continue;
      mpq_class f = a(i, col);
      for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) -= f * a(row, j);
      if (rhs)
        for (auto& r : *rhs) r[i] -= f * r[row];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::optional<RatMatrix> RatMatrix::inverse() const {
  if (r_ != c_) return std::nullopt;
  RatMatrix a = *this;
  std::vector<RatVec> cols(c_, RatVec(r_, 0));
  for (std::size_t j = 0; j < c_; ++j) cols[j][j] = 1;
  auto piv = row_reduce(a, &cols);
  if (piv.size() != r_) return std::nullopt;
  RatMatrix inv(r_, c_);
  for (std::size_t j = 0; j < c_; ++j)
    for (std::size_t i = 0; i < r_; ++i) inv(i, j) = cols[j][i];
  return inv;
}

std::size_t RatMatrix::rank() const {
  RatMatrix a = *this;
  return row_reduce(a, nullptr).size();
}

std::optional<RatVec> solve_rational(const RatMatrix& a0, const RatVec& b) {
  if (b.size() != a0.rows()) throw std::invalid_argument("solve: size mismatch");
  RatMatrix a = a0;
  std::vector<RatVec> rhs{b};
  auto piv = row_reduce(a, &rhs);
  for (std::size_t i = piv.size(); i < a.rows(); ++i)
    if (sgn(rhs[0][i]) != 0) return std::nullopt;
  RatVec x(a.cols(), 0);
  for (std::size_t k = 0; k < piv.size(); ++k) x[piv[k]] = rhs[0][k];
  return x;
}

std::vector<Weight> integer_kernel(const IntMatrix& a) {
  // Unimodular column operations bring A to column echelon form; the
  // transformation columns matching zero columns of A*U span the kernel.
  const std::size_t m = a.rows(), n = a.cols();
  std::vector<std::vector<mpz_class>> A(m, std::vector<mpz_class>(n));
  std::vector<std::vector<mpz_class>> U(n, std::vector<mpz_class>(n));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) A[i][j] = static_cast<long>(a(i, j));
  for (std::size_t j = 0; j < n; ++j) U[j][j] = 1;

  auto col_op = [&](std::size_t j, std::size_t k, const mpz_class& p, const mpz_class& q,
                    const mpz_class& r, const mpz_class& s) {
    // (col_j, col_k) <- (p col_j + q col_k, r col_j + s col_k)
    for (std::size_t i = 0; i < m; ++i) {
      mpz_class x = A[i][j], y = A[i][k];
      A[i][j] = p * x + q * y;
      A[i][k] = r * x + s * y;
    }
    for (std::size_t i = 0; i < n; ++i) {
      mpz_class x = U[i][j], y = U[i][k];
      U[i][j] = p * x + q * y;
      U[i][k] = r * x + s * y;
    }
  };

  std::size_t lead = 0;  // next column to receive a pivot
  for (std::size_t i = 0; i < m && lead < n; ++i) {
    for (std::size_t k = lead + 1; k < n; ++k) {
      if (A[i][k] == 0) continue;
      mpz_class x = A[i][lead], y = A[i][k];
      mpz_class g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
      // [s t; -y/g x/g] has determinant 1.
      col_op(lead, k, s, t, -y / g, x / g);
    }
    if (A[i][lead] != 0) ++lead;
  }
  std::vector<Weight> basis;
  for (std::size_t j = lead; j < n; ++j) {
    Weight v(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (!U[i][j].fits_slong_p()) throw std::overflow_error("integer kernel overflow");
      v[i] = U[i][j].get_si();
    }
    basis.push_back(v);
  }
  return basis;
}

RatVec mod_one(const RatVec& v) {
  RatVec out = v;
  for (auto& x : out) {
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    x -= fl;
    x.canonicalize();
  }
  return out;
}

Int lcm_of_denominators(const RatVec& v) {
  mpz_class l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  return l.get_si();
}

std::string rat_str(const mpq_class& q) { return q.get_str(); }

}  // namespace satake
