#pragma once

// Shared fixtures and independent oracles for the unit tests. The oracles
// recompute quantities from closed forms without going through the library
// code paths they are compared against.

#include <random>
#include <vector>

#include "uqsl2/uqsl2.hpp"

namespace testing_support {

using namespace uqsl2;

inline QContext ctx4(IdentKind ident = IdentKind::Primary, int t = 0) {
  return QContext::make(4, -2, ThetaMode::SquareIsQ, t, ident);
}

inline QContext ctx4_inv(IdentKind ident = IdentKind::Primary, int t = 0) {
  return QContext::make(4, Rational(1, 2), ThetaMode::SquareIsQInverse, t, ident);
}

inline QContext ctx9(IdentKind ident = IdentKind::Primary, int t = 0) {
  return QContext::make(9, -3, ThetaMode::SquareIsQ, t, ident);
}

/// All 20 (mode, ident, t) cells at q = 4.
inline std::vector<QContext> all_cells_q4() {
  std::vector<QContext> out;
  for (ThetaMode m : {ThetaMode::SquareIsQ, ThetaMode::SquareIsQInverse})
    for (IdentKind id : {IdentKind::Primary, IdentKind::Secondary})
      for (int t = -2; t <= 2; ++t)
        out.push_back(QContext::make(4, m == ThetaMode::SquareIsQ ? Rational(-2) : Rational(1, 2), m,
                                     t, id));
  return out;
}

/// q^n by repeated multiplication.
inline Rational naive_pow(const Rational& q, long n) {
  Rational r = 1;
  for (long i = 0; i < (n < 0 ? -n : n); ++i) r *= q;
  return n < 0 ? Rational(1 / r) : r;
}

/// [n]_q as the Laurent sum q^{n-1} + q^{n-3} + ... + q^{1-n} (n >= 0).
inline Rational qint_sum(long n, const Rational& q) {
  Rational s = 0;
  for (long j = 0; j < n; ++j) s += naive_pow(q, n - 1 - 2 * j);
  return s;
}

inline Rational qfact_sum(long n, const Rational& q) {
  Rational s = 1;
  for (long j = 1; j <= n; ++j) s *= qint_sum(j, q);
  return s;
}

/// Entry-by-entry product with no shortcuts.
inline Matrix naive_mul(const Matrix& a, const Matrix& b) {
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Rational s = 0;
      for (std::size_t k = 0; k < a.cols(); ++k) s += a(i, k) * b(k, j);
      c(i, j) = s;
    }
  return c;
}

/// Closed forms of T, T^vee, T^{-1}, (T^vee)^{-1} on the v-basis of V_d:
/// column i holds the single entry at row d - i.
struct ClosedFormT {
  Matrix T, T_vee, T_inv, T_vee_inv;
};

inline ClosedFormT closed_form_T(int d, const Rational& q) {
  const std::size_t n = static_cast<std::size_t>(d) + 1;
  ClosedFormT o{Matrix(n, n), Matrix(n, n), Matrix(n, n), Matrix(n, n)};
  for (long i = 0; i <= d; ++i) {
    const std::size_t r = static_cast<std::size_t>(d - i), c = static_cast<std::size_t>(i);
    const int s_di = ((d - i) % 2 == 0) ? 1 : -1;
    const int s_i = (i % 2 == 0) ? 1 : -1;
    o.T(r, c) = s_di * naive_pow(q, (d - i) * (i + 1));
    o.T_vee(r, c) = s_i * naive_pow(q, i * (d - i + 1));
    o.T_inv(r, c) = s_i * naive_pow(q, i * (i - d - 1));
    o.T_vee_inv(r, c) = s_di * naive_pow(q, (i - d) * (i + 1));
  }
  return o;
}

/// Seeded random matrix with small integer-over-small-integer entries.
inline Matrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int zero_pct = 30) {
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      if (static_cast<int>(rng() % 100) < zero_pct) continue;
      const long num = static_cast<long>(rng() % 19) - 9;
      const long den = static_cast<long>(rng() % 5) + 1;
      m(i, j) = Rational(num, den);
      m(i, j).canonicalize();
    }
  return m;
}

/// Unit lower-triangular times upper-triangular with nonzero diagonal.
inline Matrix random_invertible(std::mt19937& rng, std::size_t n) {
  Matrix u = random_matrix(rng, n, n, 20);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) u(i, j) = 0;
    u(i, i) = Rational(static_cast<long>(rng() % 7) + 1, static_cast<long>(rng() % 3) + 1);
    u(i, i).canonicalize();
  }
  Matrix l = Matrix::identity(n);
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) l(i, j) = static_cast<long>(rng() % 5) - 2;
  return l * u;
}

}  // namespace testing_support

/// Asserts that `stmt` throws uqsl2::Error with the given code.
#define EXPECT_ERROR_CODE(stmt, expected_code)                                   \
  do {                                                                           \
    bool thrown_ = false;                                                        \
    try {                                                                        \
      stmt;                                                                      \
    } catch (const ::uqsl2::Error& e_) {                                         \
      thrown_ = true;                                                            \
      EXPECT_EQ(e_.code(), expected_code) << e_.what();                          \
    }                                                                            \
    EXPECT_TRUE(thrown_) << #stmt " did not throw";                             \
  } while (0)
