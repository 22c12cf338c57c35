#pragma once

// q-exponentials of nilpotent operators and the conjugation identities they
// satisfy against the equitable generators.

#include <string>

#include "uqsl2/check.hpp"
#include "uqsl2/module.hpp"

namespace uqsl2 {

namespace detail {

// sum_{i < r} sign^i q^{+-C(i,2)} / [i]_q^! m^i with r the nilpotency index.
inline Matrix exp_q_series(const Matrix& m, const QContext& ctx, bool inverse) {
  const std::size_t r = nilpotency_index(m);
  const std::size_t n = m.rows();
  Matrix sum = Matrix::identity(n);
  Matrix power = Matrix::identity(n);
  for (std::size_t i = 1; i < r; ++i) {
    power = power * m;
    const auto ii = static_cast<std::int64_t>(i);
    const std::int64_t binom = ii * (ii - 1) / 2;
    Rational c = ctx.q_pow(inverse ? -binom : binom) / q_fact(ii, ctx);
    if (inverse && (i % 2 == 1)) c = -c;
    sum += power * c;
  }
  return sum;
}

}  // namespace detail

/// exp_q(m) = sum_i q^{C(i,2)} / [i]_q^! m^i, truncated at the nilpotency index.
inline Matrix exp_q(const Matrix& m, const QContext& ctx) {
  return detail::exp_q_series(m, ctx, false);
}

/// sum_i (-1)^i q^{-C(i,2)} / [i]_q^! m^i, the two-sided inverse of exp_q(m).
inline Matrix exp_q_inverse(const Matrix& m, const QContext& ctx) {
  return detail::exp_q_series(m, ctx, true);
}

/// exp_q(q^2 m) (1 - (q^2 - 1) m) == exp_q(m).
inline bool verify_shift_identity(const Matrix& m, const QContext& ctx) {
  const Rational q2 = ctx.q() * ctx.q();
  const Matrix one = Matrix::identity(m.rows());
  const Matrix lhs = exp_q(m * q2, ctx) * (one - m * Rational(q2 - 1));
  return lhs == exp_q(m, ctx);
}

/// The conjugation identities for exp_q(n_z) on a module, plus the
/// commutator recursion z n_z^i - n_z^i z = q^{1-i}[i]_q (n_z^{i-1} x - y n_z^{i-1})
/// for 1 <= i <= dim. Operators are read from the module, so a perturbed n_z
/// propagates into every check.
inline CheckList conjugation_suite(const Module& mod) {
  const QContext& ctx = mod.context();
  const Matrix& x = mod[Symbol::x];
  const Matrix& y = mod[Symbol::y];
  const Matrix& z = mod[Symbol::z];
  const Matrix& nx = mod[Symbol::n_x];
  const Matrix& ny = mod[Symbol::n_y];
  const Matrix& nz = mod[Symbol::n_z];
  const Matrix& lambda = mod[Symbol::Lambda];
  const Matrix x_inv = mat_inverse(x);
  const Matrix ez = exp_q(nz, ctx);
  const Matrix ez_inv = exp_q_inverse(nz, ctx);
  auto conj = [&](const Matrix& m) { return ez_inv * m * ez; };

  CheckList out;
  out.push_back({"exp_q(nz)^-1 y exp_q(nz) = x^-1", conj(y), x_inv});
  out.push_back({"exp_q(nz)^-1 z exp_q(nz) = x - x^-1 + z", conj(z), x - x_inv + z});
  out.push_back({"exp_q(nz)^-1 x exp_q(nz) = xyx", conj(x), x * y * x});
  out.push_back({"exp_q(nz)^-1 nx exp_q(nz) = x^-1 ny x^-1", conj(nx), x_inv * ny * x_inv});
  {
    const Rational inv = 1 / ctx.q_minus_qinv();
    const Rational c = (ctx.q() + ctx.q_inv()) * inv;
    out.push_back({"exp_q(nz)^-1 ny exp_q(nz) = Lambda x/(q-q^-1) + ny - (q+q^-1)/(q-q^-1) x^2 + x nz x",
                   conj(ny), (lambda * x) * inv + ny - (x * x) * c + x * nz * x});
  }
  out.push_back({"(y+z) exp_q(nz) = exp_q(nz) (x+z)", (y + z) * ez, ez * (x + z)});

  const Matrix one = Matrix::identity(mod.dim());
  Matrix prev = one;  // n_z^{i-1}
  bool rec_ok = true;
  Matrix rec_lhs = Matrix::zero(mod.dim()), rec_rhs = Matrix::zero(mod.dim());
  for (std::size_t i = 1; i <= mod.dim(); ++i) {
    const Matrix cur = prev * nz;
    const auto ii = static_cast<std::int64_t>(i);
    const Matrix lhs = z * cur - cur * z;
    const Matrix rhs = (prev * x - y * prev) * Rational(ctx.q_pow(1 - ii) * q_int(ii, ctx));
    if (lhs != rhs && rec_ok) {
      rec_ok = false;
      rec_lhs = lhs;
      rec_rhs = rhs;
    }
    prev = cur;
  }
  out.push_back({"z nz^i - nz^i z = q^(1-i)[i]_q (nz^(i-1) x - y nz^(i-1)), 1<=i<=d+1", rec_lhs,
                 rec_rhs});
  out.push_back({"exp_q(nz) exp_q(nz)^-1 = I", ez * ez_inv, one});
  out.push_back({"exp_q(nz)^-1 exp_q(nz) = I", ez_inv * ez, one});
  out.push_back({"exp_q(nz)^-1 Lambda exp_q(nz) = Lambda", conj(lambda), lambda});
  out.push_back({"exp_q(nz)^-1 nz exp_q(nz) = nz", conj(nz), nz});
  return out;
}

}  // namespace uqsl2
