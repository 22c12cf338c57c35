#pragma once

// Dense exact linear algebra over Q.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "uqsl2/scalars.hpp"

namespace uqsl2 {

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }
  static Matrix zero(std::size_t n) { return Matrix(n, n); }
  static Matrix scalar(std::size_t n, const Rational& c) { return identity(n) * c; }
  static Matrix diagonal(std::span<const Rational> diag) {
    Matrix m(diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
    return m;
  }
  static Matrix from_rows(const std::vector<std::vector<Rational>>& rows) {
    if (rows.empty() || rows.front().empty())
      throw Error(ErrorCode::DimensionMismatch, "matrix needs at least one entry");
    Matrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) throw Error(ErrorCode::DimensionMismatch, "ragged rows");
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  std::span<const Rational> entries() const { return entries_; }

  bool is_zero() const {
    for (const auto& v : entries_)
      if (sgn(v) != 0) return false;
    return true;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

  Matrix& operator+=(const Matrix& o) {
    require_same_shape(o);
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    require_same_shape(o);
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
    return *this;
  }
  Matrix& operator*=(const Rational& c) {
    for (auto& v : entries_) v *= c;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator-(Matrix a) {
    for (auto& v : a.entries_) v = -v;
    return a;
  }
  friend Matrix operator*(Matrix a, const Rational& c) { return a *= c; }
  friend Matrix operator*(const Rational& c, Matrix a) { return a *= c; }

  // Zero entries are skipped; most operators here are bidiagonal or sparser.
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_)
      throw Error(ErrorCode::DimensionMismatch,
                  "product of " + a.shape() + " and " + b.shape());
    Matrix c(a.rows_, b.cols_);
    Rational tmp;
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Rational& aik = a(i, k);
        if (sgn(aik) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const Rational& bkj = b(k, j);
          if (sgn(bkj) == 0) continue;
          mpq_mul(tmp.get_mpq_t(), aik.get_mpq_t(), bkj.get_mpq_t());
          c(i, j) += tmp;
        }
      }
    return c;
  }

  /// Matrix times column vector.
  std::vector<Rational> apply(std::span<const Rational> v) const {
    if (v.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "vector length");
    std::vector<Rational> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (sgn((*this)(i, j)) != 0 && sgn(v[j]) != 0) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  std::vector<Rational> column(std::size_t j) const {
    std::vector<Rational> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

 private:
  void require_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw Error(ErrorCode::DimensionMismatch, shape() + " vs " + o.shape());
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

inline Matrix mat_mul(const Matrix& a, const Matrix& b) { return a * b; }

inline Matrix mat_pow(const Matrix& m, std::size_t n) {
  if (!m.square()) throw Error(ErrorCode::DimensionMismatch, "power of non-square matrix");
  Matrix r = Matrix::identity(m.rows());
  for (std::size_t i = 0; i < n; ++i) r = r * m;
  return r;
}

/// Gauss-Jordan on [m | I], pivoting on the first nonzero entry in each column.
inline Matrix mat_inverse(const Matrix& m) {
  if (!m.square()) throw Error(ErrorCode::DimensionMismatch, "inverse of non-square matrix");
  const std::size_t n = m.rows();
  Matrix a = m;
  Matrix inv = Matrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && sgn(a(pivot, col)) == 0) ++pivot;
    if (pivot == n) throw Error(ErrorCode::Singular, "matrix is singular");
    if (pivot != col)
      for (std::size_t j = 0; j < n; ++j) {
        a(pivot, j).swap(a(col, j));
        inv(pivot, j).swap(inv(col, j));
      }
    Rational scale = 1 / a(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) *= scale;
      inv(col, j) *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || sgn(a(r, col)) == 0) continue;
      Rational factor = a(r, col);
      for (std::size_t j = 0; j < n; ++j) {
        if (sgn(a(col, j)) != 0) a(r, j) -= factor * a(col, j);
        if (sgn(inv(col, j)) != 0) inv(r, j) -= factor * inv(col, j);
      }
    }
  }
  return inv;
}

/// Coefficients indexed by degree; the zero polynomial is the empty vector.
class PolyCoeffs {
 public:
  PolyCoeffs() = default;
  explicit PolyCoeffs(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  std::span<const Rational> coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

  Rational operator()(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  friend bool operator==(const PolyCoeffs&, const PolyCoeffs&) = default;

 private:
  void trim() {
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
  }
  std::vector<Rational> coeffs_;
};

/// Horner evaluation sum_i p_i m^i with m^0 = I.
inline Matrix poly_eval(const PolyCoeffs& p, const Matrix& m) {
  if (!m.square()) throw Error(ErrorCode::DimensionMismatch, "poly_eval on non-square matrix");
  const std::size_t n = m.rows();
  Matrix acc = Matrix::zero(n);
  auto c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * m + Matrix::scalar(n, *it);
  return acc;
}

/// Least r with m^r = 0; throws NotNilpotent when m^n != 0.
inline std::size_t nilpotency_index(const Matrix& m) {
  if (!m.square()) throw Error(ErrorCode::DimensionMismatch, "nilpotency of non-square matrix");
  const std::size_t n = m.rows();
  if (m.is_zero()) return 1;
  Matrix p = m;
  for (std::size_t r = 2; r <= n; ++r) {
    p = p * m;
    if (p.is_zero()) return r;
  }
  throw Error(ErrorCode::NotNilpotent, "matrix power m^" + std::to_string(n) + " is nonzero");
}

/// The unique polynomial of degree < nodes.size() through (nodes[i], values[i]),
/// built in Newton form and expanded to monomial coefficients.
inline PolyCoeffs lagrange_interpolate(std::span<const Rational> nodes,
                                       std::span<const Rational> values) {
  if (nodes.size() != values.size())
    throw Error(ErrorCode::ContractViolation, "nodes and values differ in length");
  const std::size_t n = nodes.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (nodes[i] == nodes[j])
        throw Error(ErrorCode::DuplicateNode, "node " + to_string(nodes[i]) + " repeated");
  std::vector<Rational> divided(values.begin(), values.end());
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i)
      divided[i] = (divided[i] - divided[i - 1]) / (nodes[i] - nodes[i - level]);

  std::vector<Rational> coeffs(n == 0 ? 0 : 1, Rational(0));
  for (std::size_t k = n; k-- > 0;) {
    // coeffs <- coeffs * (X - nodes[k]) + divided[k]
    std::vector<Rational> next(coeffs.size() + 1, Rational(0));
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      next[i + 1] += coeffs[i];
      next[i] -= coeffs[i] * nodes[k];
    }
    next[0] += divided[k];
    coeffs = std::move(next);
  }
  return PolyCoeffs(std::move(coeffs));
}

/// c when m == c * I exactly.
inline std::optional<Rational> scalar_detect(const Matrix& m) {
  if (!m.square()) throw Error(ErrorCode::DimensionMismatch, "scalar_detect on non-square matrix");
  const Rational c = m(0, 0);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (i == j ? m(i, j) != c : sgn(m(i, j)) != 0) return std::nullopt;
    }
  return c;
}

/// Block-diagonal assembly; blocks must be square.
inline Matrix block_diagonal(std::span<const Matrix> blocks) {
  std::size_t n = 0;
  for (const auto& b : blocks) {
    if (!b.square()) throw Error(ErrorCode::DimensionMismatch, "non-square block");
    n += b.rows();
  }
  Matrix m(n, n);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) m(off + i, off + j) = b(i, j);
    off += b.rows();
  }
  return m;
}

/// g^n for signed n, given g and g^{-1}.
inline Matrix signed_power(const Matrix& g, const Matrix& g_inv, long n) {
  return n >= 0 ? mat_pow(g, static_cast<std::size_t>(n))
                : mat_pow(g_inv, static_cast<std::size_t>(-n));
}

}  // namespace uqsl2
