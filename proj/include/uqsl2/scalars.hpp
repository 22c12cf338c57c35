#pragma once

// Exact scalars over Q: rationals, the parameter context (q, theta, t,
// identification), q-integers, q-factorials and half-integer powers of q.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

#include "uqsl2/error.hpp"

namespace uqsl2 {

// gmp keeps every mpq_class result canonical (reduced, positive denominator);
// only values built from raw strings need an explicit canonicalize().
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  auto valid_int = [](const std::string& part) {
    if (part.empty()) return false;
    std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') return false;
    return true;
  };
  std::string num = slash == std::string::npos ? s : s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
    throw Error(ErrorCode::ParseError, "not a rational: '" + s + "'");
  if (num[0] == '+') num.erase(0, 1);
  Integer n(num), d(den);
  if (d == 0) throw Error(ErrorCode::ParseError, "zero denominator: '" + s + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

// Always "num/den", including "7/1" and "0/1".
inline std::string to_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Rational pow(const Rational& base, std::int64_t exponent) {
  if (exponent == 0) return Rational(1);
  if (exponent < 0) {
    if (base == 0) throw Error(ErrorCode::ContractViolation, "0 raised to a negative power");
    Rational inv = 1 / base;
    return pow(inv, -exponent);
  }
  Rational result(1), b(base);
  auto e = static_cast<std::uint64_t>(exponent);
  while (e != 0) {
    if (e & 1U) result *= b;
    e >>= 1U;
    if (e != 0) b *= b;
  }
  return result;
}

inline int sign_power(std::int64_t exponent) { return (exponent % 2 == 0) ? 1 : -1; }

enum class ThetaMode { SquareIsQ, SquareIsQInverse };
enum class IdentKind { Primary, Secondary };

constexpr std::string_view to_string(ThetaMode m) {
  return m == ThetaMode::SquareIsQ ? "sq-q" : "sq-qinv";
}
constexpr std::string_view to_string(IdentKind k) {
  return k == IdentKind::Primary ? "primary" : "secondary";
}

inline ThetaMode parse_theta_mode(std::string_view s) {
  if (s == "sq-q") return ThetaMode::SquareIsQ;
  if (s == "sq-qinv") return ThetaMode::SquareIsQInverse;
  throw Error(ErrorCode::ConfigError, "unknown theta mode '" + std::string(s) + "'");
}
inline IdentKind parse_ident_kind(std::string_view s) {
  if (s == "primary") return IdentKind::Primary;
  if (s == "secondary") return IdentKind::Secondary;
  throw Error(ErrorCode::ConfigError, "unknown identification '" + std::string(s) + "'");
}

/// Parameters shared by every construction: q, the identification of type
/// (theta, t), and q^{1/2} derived from theta by the sign convention
///   q^{1/2} = -theta        if theta^2 = q,
///   q^{1/2} = theta^{-1}    if theta^2 = q^{-1}.
/// Immutable once built; make() is the only way to get a valid one.
class QContext {
 public:
  static QContext make(const Rational& q, const Rational& theta, ThetaMode mode, int t,
                       IdentKind ident) {
    if (q == 0 || q == 1 || q == -1)
      throw Error(ErrorCode::ConfigError, "q must not be 0 or +-1 (got " + to_string(q) + ")");
    if (theta == 0) throw Error(ErrorCode::ConfigError, "theta must be nonzero");
    Rational sq = theta * theta;
    Rational target = mode == ThetaMode::SquareIsQ ? q : Rational(1 / q);
    if (sq != target)
      throw Error(ErrorCode::ConfigError,
                  "theta^2 = " + to_string(sq) + " does not match mode " +
                      std::string(to_string(mode)) + " for q = " + to_string(q));
    QContext ctx;
    ctx.q_ = q;
    ctx.theta_ = theta;
    ctx.mode_ = mode;
    ctx.t_ = t;
    ctx.ident_ = ident;
    ctx.q_half_ = mode == ThetaMode::SquareIsQ ? Rational(-theta) : Rational(1 / theta);
    ctx.q_inv_ = 1 / q;
    ctx.q_minus_qinv_ = q - ctx.q_inv_;
    return ctx;
  }

  const Rational& q() const { return q_; }
  const Rational& q_inv() const { return q_inv_; }
  const Rational& theta() const { return theta_; }
  ThetaMode theta_mode() const { return mode_; }
  int t() const { return t_; }
  IdentKind ident() const { return ident_; }
  const Rational& q_half() const { return q_half_; }
  /// q - q^{-1}, never zero for a valid context.
  const Rational& q_minus_qinv() const { return q_minus_qinv_; }

  Rational q_pow(std::int64_t n) const { return pow(q_, n); }

  QContext with(IdentKind ident) const {
    QContext c = *this;
    c.ident_ = ident;
    return c;
  }
  QContext with_t(int t) const {
    QContext c = *this;
    c.t_ = t;
    return c;
  }

  std::string describe() const {
    return "q=" + to_string(q_) + " theta=" + to_string(theta_) + " mode=" +
           std::string(to_string(mode_)) + " t=" + std::to_string(t_) +
           " ident=" + std::string(to_string(ident_));
  }

 private:
  QContext() = default;
  Rational q_, q_inv_, theta_, q_half_, q_minus_qinv_;
  ThetaMode mode_ = ThetaMode::SquareIsQ;
  int t_ = 0;
  IdentKind ident_ = IdentKind::Primary;
};

/// [n]_q = (q^n - q^{-n}) / (q - q^{-1}).
inline Rational q_int(std::int64_t n, const QContext& ctx) {
  return (ctx.q_pow(n) - ctx.q_pow(-n)) / ctx.q_minus_qinv();
}

/// [n]_q^! with [0]_q^! = 1.
inline Rational q_fact(std::int64_t n, const QContext& ctx) {
  if (n < 0) throw Error(ErrorCode::ContractViolation, "q_fact of negative n");
  Rational r(1);
  for (std::int64_t i = 2; i <= n; ++i) r *= q_int(i, ctx);
  return r;
}

/// q^{m/2} := (q^{1/2})^m with the stored q^{1/2}.
inline Rational q_half_power(std::int64_t m, const QContext& ctx) { return pow(ctx.q_half(), m); }

}  // namespace uqsl2
