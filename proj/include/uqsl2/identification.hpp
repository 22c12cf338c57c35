#pragma once

// The primary and secondary identifications of type (theta, t) between the
// Chevalley generators e, f, k^{+-1} and the equitable generators x, y^{+-1}, z.
//
// Both directions are written once as expressions; the matrix maps evaluate
// those expressions on concrete generators and then check the target
// presentation's relations.

#include <map>
#include <string>

#include "uqsl2/check.hpp"
#include "uqsl2/expression.hpp"
#include "uqsl2/relations.hpp"

namespace uqsl2 {

namespace detail {

inline AlgebraExpression signed_gen_power(Symbol g, Symbol g_inv, long n) {
  return n >= 0 ? AlgebraExpression::power(g, static_cast<std::size_t>(n))
                : AlgebraExpression::power(g_inv, static_cast<std::size_t>(-n));
}

}  // namespace detail

/// x, y, y^{-1}, z written in e, f, k, k^{-1}.
inline std::map<Symbol, AlgebraExpression> equitable_in_chevalley(const QContext& ctx) {
  using E = AlgebraExpression;
  const long t = ctx.t();
  const Rational c_x = ctx.q_pow(1 + t) * ctx.q_minus_qinv() / ctx.theta();
  const Rational c_z = ctx.q_pow(-t) * ctx.q_minus_qinv() * ctx.theta();
  auto kp = [](long n) { return detail::signed_gen_power(Symbol::k, Symbol::k_inv, n); };
  const E e = E::gen(Symbol::e), f = E::gen(Symbol::f), k = E::gen(Symbol::k),
          ki = E::gen(Symbol::k_inv);
  if (ctx.ident() == IdentKind::Primary) {
    return {
        {Symbol::x, ki - c_x * (kp(-1 - t) * e)},
        {Symbol::y, k},
        {Symbol::y_inv, ki},
        {Symbol::z, ki + c_z * (f * kp(t))},
    };
  }
  return {
      {Symbol::x, k - c_x * (kp(1 + t) * f)},
      {Symbol::y, ki},
      {Symbol::y_inv, k},
      {Symbol::z, k + c_z * (e * kp(-t))},
  };
}

/// e, f, k, k^{-1} written in x, y, y^{-1}, z.
inline std::map<Symbol, AlgebraExpression> chevalley_in_equitable(const QContext& ctx) {
  using E = AlgebraExpression;
  const long t = ctx.t();
  const Rational c_raise = ctx.q_pow(-1 - t) / ctx.q_minus_qinv() * ctx.theta();
  const Rational c_lower = ctx.q_pow(t) / ctx.q_minus_qinv() / ctx.theta();
  auto yp = [](long n) { return detail::signed_gen_power(Symbol::y, Symbol::y_inv, n); };
  const E x = E::gen(Symbol::x), y = E::gen(Symbol::y), yi = E::gen(Symbol::y_inv),
          z = E::gen(Symbol::z), one = E::one();
  const E from_yx = c_raise * (yp(t) * (one - y * x));
  const E from_z = c_lower * ((z - yi) * yp(-t));
  if (ctx.ident() == IdentKind::Primary)
    return {{Symbol::e, from_yx}, {Symbol::f, from_z}, {Symbol::k, y}, {Symbol::k_inv, yi}};
  return {{Symbol::e, from_z}, {Symbol::f, from_yx}, {Symbol::k, yi}, {Symbol::k_inv, y}};
}

struct ChevalleyGenerators {
  Matrix e, f, k, k_inv;
};

struct EquitableGenerators {
  Matrix x, y, y_inv, z;
};

inline GeneratorSet to_generator_set(const ChevalleyGenerators& c) {
  GeneratorSet g;
  g.set(Symbol::e, c.e);
  g.set(Symbol::f, c.f);
  g.set(Symbol::k, c.k);
  g.set(Symbol::k_inv, c.k_inv);
  return g;
}

inline GeneratorSet to_generator_set(const EquitableGenerators& q) {
  GeneratorSet g;
  g.set(Symbol::x, q.x);
  g.set(Symbol::y, q.y);
  g.set(Symbol::y_inv, q.y_inv);
  g.set(Symbol::z, q.z);
  return g;
}

namespace detail {

inline void require_relations(const std::vector<NamedExpression>& rels, const GeneratorSet& g,
                              const char* direction) {
  for (const auto& check : relation_checks(rels, g))
    if (!check.holds())
      throw Error(ErrorCode::RelationFailure,
                  std::string(direction) + " output violates '" + check.name + "'");
}

}  // namespace detail

inline EquitableGenerators equitable_from_chevalley(const ChevalleyGenerators& chev,
                                                    const QContext& ctx) {
  const GeneratorSet src = to_generator_set(chev);
  const auto images = equitable_in_chevalley(ctx);
  EquitableGenerators out{eval_expression(images.at(Symbol::x), src),
                          eval_expression(images.at(Symbol::y), src),
                          eval_expression(images.at(Symbol::y_inv), src),
                          eval_expression(images.at(Symbol::z), src)};
  detail::require_relations(equitable_relations(ctx), to_generator_set(out),
                            "equitable_from_chevalley");
  return out;
}

inline ChevalleyGenerators chevalley_from_equitable(const EquitableGenerators& eq,
                                                    const QContext& ctx) {
  const GeneratorSet src = to_generator_set(eq);
  const auto images = chevalley_in_equitable(ctx);
  ChevalleyGenerators out{eval_expression(images.at(Symbol::e), src),
                          eval_expression(images.at(Symbol::f), src),
                          eval_expression(images.at(Symbol::k), src),
                          eval_expression(images.at(Symbol::k_inv), src)};
  detail::require_relations(chevalley_relations(ctx), to_generator_set(out),
                            "chevalley_from_equitable");
  return out;
}

/// The four cross-expressions linking e, f with n_x, n_z under the active
/// identification. `gens` must carry e, f, k, k^{-1}, y, y^{-1}, n_x, n_z.
inline CheckList nxnz_chevalley_forms(const GeneratorSet& gens, const QContext& ctx) {
  const long t = ctx.t();
  const Rational& th = ctx.theta();
  const Matrix& e = gens.at(Symbol::e);
  const Matrix& f = gens.at(Symbol::f);
  const Matrix& k = gens.at(Symbol::k);
  const Matrix& ki = gens.at(Symbol::k_inv);
  const Matrix& y = gens.at(Symbol::y);
  const Matrix& yi = gens.at(Symbol::y_inv);
  const Matrix& nx = gens.at(Symbol::n_x);
  const Matrix& nz = gens.at(Symbol::n_z);
  auto yp = [&](long n) { return signed_power(y, yi, n); };
  auto kp = [&](long n) { return signed_power(k, ki, n); };

  const Matrix raise = th * ctx.q_pow(-t) * (yp(t) * nz);
  const Matrix lower = Rational(-1 / th) * ctx.q_pow(1 + t) * (nx * yp(-1 - t));
  if (ctx.ident() == IdentKind::Primary) {
    return {
        {"e = theta q^-t y^t nz", e, raise},
        {"f = -theta^-1 q^(1+t) nx y^(-1-t)", f, lower},
        {"nz = theta^-1 q^t k^-t e", nz, Rational(1 / th) * ctx.q_pow(t) * (kp(-t) * e)},
        {"nx = -theta q^(-1-t) f k^(1+t)", nx, Rational(-th) * ctx.q_pow(-1 - t) * (f * kp(1 + t))},
    };
  }
  return {
      {"f = theta q^-t y^t nz", f, raise},
      {"e = -theta^-1 q^(1+t) nx y^(-1-t)", e, lower},
      {"nz = theta^-1 q^t k^t f", nz, Rational(1 / th) * ctx.q_pow(t) * (kp(t) * f)},
      {"nx = -theta q^(-1-t) e k^(-1-t)", nx, Rational(-th) * ctx.q_pow(-1 - t) * (e * kp(-1 - t))},
  };
}

}  // namespace uqsl2
