#pragma once

// Defining relations of the Chevalley and equitable presentations, written
// as expressions that must vanish.

#include <string>
#include <utility>
#include <vector>

#include "uqsl2/check.hpp"
#include "uqsl2/expression.hpp"

namespace uqsl2 {

using NamedExpression = std::pair<std::string, AlgebraExpression>;

inline std::vector<NamedExpression> chevalley_relations(const QContext& ctx) {
  using E = AlgebraExpression;
  const Rational& q = ctx.q();
  const Rational q2 = q * q;
  const Rational qm2 = 1 / q2;
  const E e = E::gen(Symbol::e), f = E::gen(Symbol::f), k = E::gen(Symbol::k),
          ki = E::gen(Symbol::k_inv), one = E::one();
  return {
      {"k kinv = 1", k * ki - one},
      {"kinv k = 1", ki * k - one},
      {"k e = q^2 e k", k * e - q2 * (e * k)},
      {"k f = q^-2 f k", k * f - qm2 * (f * k)},
      {"ef - fe = (k - kinv)/(q - q^-1)",
       e * f - f * e - Rational(1 / ctx.q_minus_qinv()) * (k - ki)},
  };
}

inline std::vector<NamedExpression> equitable_relations(const QContext& ctx) {
  using E = AlgebraExpression;
  const Rational& q = ctx.q();
  const Rational& qi = ctx.q_inv();
  const E x = E::gen(Symbol::x), y = E::gen(Symbol::y), yi = E::gen(Symbol::y_inv),
          z = E::gen(Symbol::z), one = E::one();
  const Rational c = ctx.q_minus_qinv();
  return {
      {"y yinv = 1", y * yi - one},
      {"yinv y = 1", yi * y - one},
      {"q xy - q^-1 yx = q - q^-1", q * (x * y) - qi * (y * x) - c * one},
      {"q yz - q^-1 zy = q - q^-1", q * (y * z) - qi * (z * y) - c * one},
      {"q zx - q^-1 xz = q - q^-1", q * (z * x) - qi * (x * z) - c * one},
  };
}

inline CheckList relation_checks(const std::vector<NamedExpression>& rels,
                                 const GeneratorSet& gens) {
  CheckList out;
  const auto zero = Matrix::zero(gens.dim());
  for (const auto& [name, expr] : rels) out.push_back({name, eval_expression(expr, gens), zero});
  return out;
}

}  // namespace uqsl2
