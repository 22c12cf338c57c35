#pragma once

// Lusztig automorphisms L, L^vee (and inverses) as substitution tables on the
// Chevalley generators, the Lusztig operators T, T^vee (and inverses) built
// weight space by weight space, and the identities linking them to the
// equitable rotators.

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "uqsl2/check.hpp"
#include "uqsl2/identification.hpp"
#include "uqsl2/module.hpp"
#include "uqsl2/qexp.hpp"
#include "uqsl2/relations.hpp"
#include "uqsl2/rotators.hpp"

namespace uqsl2 {

enum class TableName { L, LVee, LInv, LVeeInv };

constexpr std::string_view to_string(TableName t) {
  switch (t) {
    case TableName::L: return "L";
    case TableName::LVee: return "L_vee";
    case TableName::LInv: return "L^-1";
    case TableName::LVeeInv: return "(L_vee)^-1";
  }
  return "?";
}

struct AutomorphismTable {
  TableName name;
  std::map<Symbol, AlgebraExpression> images;  // over e, f, k, k^{-1}
};

inline AutomorphismTable automorphism_table(TableName name) {
  using E = AlgebraExpression;
  const E e = E::gen(Symbol::e), f = E::gen(Symbol::f), k = E::gen(Symbol::k),
          ki = E::gen(Symbol::k_inv);
  const Rational m1(-1);
  std::map<Symbol, E> img{{Symbol::k, ki}, {Symbol::k_inv, k}};
  switch (name) {
    case TableName::L:
      img.emplace(Symbol::e, m1 * (f * k));
      img.emplace(Symbol::f, m1 * (ki * e));
      break;
    case TableName::LVee:
      img.emplace(Symbol::e, m1 * (k * f));
      img.emplace(Symbol::f, m1 * (e * ki));
      break;
    case TableName::LInv:
      img.emplace(Symbol::e, m1 * (ki * f));
      img.emplace(Symbol::f, m1 * (e * k));
      break;
    case TableName::LVeeInv:
      img.emplace(Symbol::e, m1 * (f * ki));
      img.emplace(Symbol::f, m1 * (k * e));
      break;
  }
  return {name, std::move(img)};
}

/// Image of an expression under the automorphism. Equitable symbols are
/// first rewritten in e, f, k^{+-1} through the context's identification.
inline AlgebraExpression apply_table(const AutomorphismTable& table, const AlgebraExpression& expr,
                                     const QContext& ctx) {
  return substitute(substitute(expr, equitable_in_chevalley(ctx)), table.images);
}

/// The 8-letter alphabet used for conjugation words.
inline constexpr std::array<Symbol, 8> kWordAlphabet = {
    Symbol::e, Symbol::f, Symbol::k, Symbol::k_inv, Symbol::x, Symbol::y, Symbol::y_inv, Symbol::z};

/// Images of every alphabet letter as matrices on `mod`. A word's image is the
/// product of its letters' images since the table is an algebra map.
inline GeneratorSet table_image_matrices(const AutomorphismTable& table, const Module& mod) {
  GeneratorSet out;
  for (Symbol s : kWordAlphabet)
    out.set(s, eval_expression(apply_table(table, AlgebraExpression::gen(s), mod.context()),
                               mod.generators()));
  return out;
}

/// Deterministic random words: lengths 1..max_len, letters uniform over the
/// alphabet. Uses raw mt19937 output so the sequence is portable.
inline std::vector<Word> random_words(std::uint32_t seed, std::size_t count,
                                      std::size_t max_len = 6) {
  std::mt19937 rng(seed);
  std::vector<Word> words;
  words.reserve(count);
  for (std::size_t n = 0; n < count; ++n) {
    const std::size_t len = 1 + rng() % max_len;
    Word w;
    for (std::size_t i = 0; i < len; ++i) w.push_back(kWordAlphabet[rng() % kWordAlphabet.size()]);
    words.push_back(std::move(w));
  }
  return words;
}

inline std::string word_to_string(const Word& w) {
  std::string s;
  for (Symbol sym : w) s += (s.empty() ? "" : ".") + std::string(to_string(sym));
  return s.empty() ? "1" : s;
}

enum class LusztigKind { T, TVee, TInv, TVeeInv };

constexpr std::string_view to_string(LusztigKind k) {
  switch (k) {
    case LusztigKind::T: return "T";
    case LusztigKind::TVee: return "Tvee";
    case LusztigKind::TInv: return "Tinv";
    case LusztigKind::TVeeInv: return "TveeInv";
  }
  return "?";
}

/// On V(lambda):
///   T          = sum_{b-a-c=lambda} e^a f^b e^c / ([a]![b]![c]!) (-1)^b q^{b-ac}
///   T^vee      = sum_{a-b+c=lambda} f^a e^b f^c / ([a]![b]![c]!) (-1)^b q^{b-ac}
///   T^{-1}     = sum_{a-b+c=lambda} f^a e^b f^c / ([a]![b]![c]!) (-1)^b q^{ac-b}
///   (T^vee)^-1 = sum_{b-a-c=lambda} e^a f^b e^c / ([a]![b]![c]!) (-1)^b q^{ac-b}
/// Exponents run below the nilpotency index of the corresponding operator.
/// The matrix is assembled column by column from the weight decomposition.
inline Matrix lusztig_operator(const Module& mod, LusztigKind kind) {
  require_type_one(mod);
  const QContext& ctx = mod.context();
  const bool efe = kind == LusztigKind::T || kind == LusztigKind::TVeeInv;
  const bool q_sign_plus = kind == LusztigKind::T || kind == LusztigKind::TVee;
  const Matrix& outer = efe ? mod[Symbol::e] : mod[Symbol::f];
  const Matrix& middle = efe ? mod[Symbol::f] : mod[Symbol::e];
  const auto outer_idx = static_cast<std::int64_t>(nilpotency_index(outer));
  const auto middle_idx = static_cast<std::int64_t>(nilpotency_index(middle));
  const auto w = weight_decomposition(mod);
  const std::size_t n = mod.dim();

  std::vector<Matrix> outer_pow{Matrix::identity(n)}, middle_pow{Matrix::identity(n)};
  for (std::int64_t i = 1; i < outer_idx; ++i) outer_pow.push_back(outer_pow.back() * outer);
  for (std::int64_t i = 1; i < middle_idx; ++i) middle_pow.push_back(middle_pow.back() * middle);
  std::vector<Rational> fact;
  for (std::int64_t i = 0; i < std::max(outer_idx, middle_idx); ++i) fact.push_back(q_fact(i, ctx));

  Matrix result(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const std::int64_t lambda = w.weight_of[j];
    std::vector<Rational> unit(n);
    unit[j] = 1;
    for (std::int64_t c = 0; c < outer_idx; ++c) {
      const auto vc = outer_pow[static_cast<std::size_t>(c)].apply(unit);
      for (std::int64_t a = 0; a < outer_idx; ++a) {
        const std::int64_t b = efe ? lambda + a + c : a + c - lambda;
        if (b < 0 || b >= middle_idx) continue;
        auto v = outer_pow[static_cast<std::size_t>(a)].apply(
            middle_pow[static_cast<std::size_t>(b)].apply(vc));
        const std::int64_t exponent = q_sign_plus ? b - a * c : a * c - b;
        Rational coeff = sign_power(b) * ctx.q_pow(exponent) /
                         (fact[static_cast<std::size_t>(a)] * fact[static_cast<std::size_t>(b)] *
                          fact[static_cast<std::size_t>(c)]);
        for (std::size_t i = 0; i < n; ++i)
          if (sgn(v[i]) != 0) result(i, j) += coeff * v[i];
      }
    }
  }
  return result;
}

inline Matrix lusztig_T(const Module& mod) { return lusztig_operator(mod, LusztigKind::T); }
inline Matrix lusztig_T_vee(const Module& mod) { return lusztig_operator(mod, LusztigKind::TVee); }
inline Matrix lusztig_T_inv(const Module& mod) { return lusztig_operator(mod, LusztigKind::TInv); }
inline Matrix lusztig_T_vee_inv(const Module& mod) {
  return lusztig_operator(mod, LusztigKind::TVeeInv);
}

struct LusztigOperators {
  Matrix T, T_vee, T_inv, T_vee_inv;
};

/// Closed form on V_d in the v-basis; every operator is anti-diagonal:
///   T v_i          = (-1)^{d-i} q^{(d-i)(i+1)} v_{d-i}
///   T^vee v_i      = (-1)^i     q^{i(d-i+1)}   v_{d-i}
///   T^{-1} v_i     = (-1)^i     q^{i(i-d-1)}   v_{d-i}
///   (T^vee)^-1 v_i = (-1)^{d-i} q^{(i-d)(i+1)} v_{d-i}
inline LusztigOperators lusztig_T_oracle(int d, const QContext& ctx) {
  const auto n = static_cast<std::size_t>(d + 1);
  LusztigOperators ops{Matrix(n, n), Matrix(n, n), Matrix(n, n), Matrix(n, n)};
  for (std::int64_t i = 0; i <= d; ++i) {
    const auto col = static_cast<std::size_t>(i);
    const auto row = static_cast<std::size_t>(d - i);
    ops.T(row, col) = sign_power(d - i) * ctx.q_pow((d - i) * (i + 1));
    ops.T_vee(row, col) = sign_power(i) * ctx.q_pow(i * (d - i + 1));
    ops.T_inv(row, col) = sign_power(i) * ctx.q_pow(i * (i - d - 1));
    ops.T_vee_inv(row, col) = sign_power(d - i) * ctx.q_pow((i - d) * (i + 1));
  }
  return ops;
}

inline LusztigOperators lusztig_operators(const Module& mod) {
  return {lusztig_T(mod), lusztig_T_vee(mod), lusztig_T_inv(mod), lusztig_T_vee_inv(mod)};
}

/// Diagonal operator acting on V(lambda) as (-1)^lambda q^lambda.
inline Matrix tt_vee_factor(const Module& mod) {
  const auto w = weight_decomposition(mod);
  std::vector<Rational> diag;
  for (int lambda : w.weight_of) diag.push_back(sign_power(lambda) * mod.context().q_pow(lambda));
  return Matrix::diagonal(diag);
}

/// T = (-1)^lambda q^lambda T^vee and T^{-1} = (-1)^lambda q^lambda (T^vee)^{-1}
/// on each V(lambda).
inline CheckList verify_tt_vee_relation(const Module& mod, const LusztigOperators& ops) {
  const Matrix factor = tt_vee_factor(mod);
  return {
      {"T = (-1)^lambda q^lambda Tvee", ops.T, ops.T_vee * factor},
      {"T^-1 = (-1)^lambda q^lambda Tvee^-1", ops.T_inv, ops.T_vee_inv * factor},
  };
}

inline CheckList verify_tt_vee_relation(const Module& mod) {
  return verify_tt_vee_relation(mod, lusztig_operators(mod));
}

/// Inverse pairs and the weight flip T V(lambda) = V(-lambda).
inline CheckList lusztig_structure_checks(const Module& mod, const LusztigOperators& ops) {
  const Matrix one = Matrix::identity(mod.dim());
  const auto w = weight_decomposition(mod);
  return {
      {"T T^-1 = I", ops.T * ops.T_inv, one},
      {"T^-1 T = I", ops.T_inv * ops.T, one},
      {"Tvee Tvee^-1 = I", ops.T_vee * ops.T_vee_inv, one},
      {"Tvee^-1 Tvee = I", ops.T_vee_inv * ops.T_vee, one},
      {"T V(lambda) = V(-lambda)", ops.T, weight_flip_part(ops.T, w)},
      {"Tvee V(lambda) = V(-lambda)", ops.T_vee, weight_flip_part(ops.T_vee, w)},
  };
}

/// The operator pair (A, A^{-1}) with table(xi) = A xi A^{-1}.
inline std::pair<const Matrix*, const Matrix*> conjugating_pair(TableName table,
                                                                const LusztigOperators& ops) {
  switch (table) {
    case TableName::L: return {&ops.T, &ops.T_inv};
    case TableName::LVee: return {&ops.T_vee, &ops.T_vee_inv};
    case TableName::LInv: return {&ops.T_inv, &ops.T};
    case TableName::LVeeInv: return {&ops.T_vee_inv, &ops.T_vee};
  }
  throw Error(ErrorCode::ContractViolation, "unknown table");
}

/// table(xi) = A xi A^{-1} for every word, where A is the table's operator.
inline CheckList verify_conjugation(const Module& mod, const AutomorphismTable& table,
                                    const std::vector<Word>& words, const LusztigOperators& ops) {
  require_type_one(mod);
  const auto [a, a_inv] = conjugating_pair(table.name, ops);
  const GeneratorSet images = table_image_matrices(table, mod);
  const std::size_t n = mod.dim();
  CheckList out;
  for (const auto& w : words) {
    out.push_back({std::string(to_string(table.name)) + "(" + word_to_string(w) + ") = conj",
                   eval_word(w, images, n), *a * eval_word(w, mod.generators(), n) * *a_inv});
  }
  return out;
}

inline CheckList verify_conjugation(const Module& mod, const AutomorphismTable& table,
                                    const std::vector<Word>& words) {
  return verify_conjugation(mod, table, words, lusztig_operators(mod));
}

/// L^vee(g) = k L(g) k^{-1} for the Chevalley generators.
inline CheckList verify_commuting_square(const Module& mod) {
  const auto L = automorphism_table(TableName::L);
  const auto LV = automorphism_table(TableName::LVee);
  const Matrix& k = mod[Symbol::k];
  const Matrix& ki = mod[Symbol::k_inv];
  CheckList out;
  for (Symbol g : {Symbol::e, Symbol::f, Symbol::k, Symbol::k_inv}) {
    out.push_back({"L_vee(" + std::string(to_string(g)) + ") = k L(" +
                       std::string(to_string(g)) + ") k^-1",
                   eval_expression(LV.images.at(g), mod.generators()),
                   k * eval_expression(L.images.at(g), mod.generators()) * ki});
  }
  return out;
}

/// The images of e, f, k^{+-1} under each table satisfy the Chevalley
/// relations, and L^{-1}(L(g)) = g, L_vee^{-1}(L_vee(g)) = g.
inline CheckList verify_table_homomorphisms(const Module& mod) {
  CheckList out;
  const auto rels = chevalley_relations(mod.context());
  for (TableName t : {TableName::L, TableName::LVee, TableName::LInv, TableName::LVeeInv}) {
    const auto table = automorphism_table(t);
    GeneratorSet img;
    for (const auto& [s, expr] : table.images) img.set(s, eval_expression(expr, mod.generators()));
    for (auto c : relation_checks(rels, img)) {
      c.name = std::string(to_string(t)) + " preserves " + c.name;
      out.push_back(std::move(c));
    }
  }
  auto compose = [&](TableName first, TableName second) {
    const auto t1 = automorphism_table(first);
    const auto t2 = automorphism_table(second);
    for (Symbol g : {Symbol::e, Symbol::f, Symbol::k, Symbol::k_inv}) {
      out.push_back({std::string(to_string(second)) + "(" + std::string(to_string(first)) + "(" +
                         std::string(to_string(g)) + ")) = " + std::string(to_string(g)),
                     eval_expression(substitute(t1.images.at(g), t2.images), mod.generators()),
                     mod[g]});
    }
  };
  compose(TableName::L, TableName::LInv);
  compose(TableName::LVee, TableName::LVeeInv);
  return out;
}

/// Conjugation actions on n_x, y, n_z for all four (automorphism, direction)
/// cells under the module's identification, plus the unit-scalar
/// specializations when theta^2 = q (cells of the first kind) or
/// theta^2 = q^{-1} (second kind).
inline CheckList verify_equitable_lusztig(const Module& mod, const LusztigOperators& ops) {
  require_type_one(mod);
  const QContext& ctx = mod.context();
  const Matrix& y = mod[Symbol::y];
  const Matrix& yi = mod[Symbol::y_inv];
  const Matrix& nx = mod[Symbol::n_x];
  const Matrix& nz = mod[Symbol::n_z];
  const Rational th2 = ctx.theta() * ctx.theta();
  const Rational th2_inv = 1 / th2;
  const bool primary = ctx.ident() == IdentKind::Primary;

  // First kind pairs with L under primary, L_vee under secondary.
  const TableName first = primary ? TableName::L : TableName::LVee;
  const TableName second = primary ? TableName::LVee : TableName::L;
  auto fwd = [&](TableName t, const Matrix& m) {
    auto [a, a_inv] = conjugating_pair(t, ops);
    return *a * m * *a_inv;
  };
  auto bwd = [&](TableName t, const Matrix& m) {
    auto [a, a_inv] = conjugating_pair(t, ops);
    return *a_inv * m * *a;
  };
  const std::string f1(to_string(first)), f2(to_string(second));
  const Matrix ynzy = yi * nz * yi;
  const Matrix ynxy = yi * nx * yi;

  CheckList out{
      {f1 + ": nx -> theta^2 q^-1 y^-1 nz y^-1", fwd(first, nx), th2 * ctx.q_inv() * ynzy},
      {f1 + ": y -> y^-1", fwd(first, y), yi},
      {f1 + ": nz -> theta^-2 q nx", fwd(first, nz), th2_inv * ctx.q() * nx},
      {f1 + "^-1: nx -> theta^2 q^-1 nz", bwd(first, nx), th2 * ctx.q_inv() * nz},
      {f1 + "^-1: y -> y^-1", bwd(first, y), yi},
      {f1 + "^-1: nz -> theta^-2 q y^-1 nx y^-1", bwd(first, nz), th2_inv * ctx.q() * ynxy},
      {f2 + ": nx -> theta^2 q y^-1 nz y^-1", fwd(second, nx), th2 * ctx.q() * ynzy},
      {f2 + ": y -> y^-1", fwd(second, y), yi},
      {f2 + ": nz -> theta^-2 q^-1 nx", fwd(second, nz), th2_inv * ctx.q_inv() * nx},
      {f2 + "^-1: nx -> theta^2 q nz", bwd(second, nx), th2 * ctx.q() * nz},
      {f2 + "^-1: y -> y^-1", bwd(second, y), yi},
      {f2 + "^-1: nz -> theta^-2 q^-1 y^-1 nx y^-1", bwd(second, nz), th2_inv * ctx.q_inv() * ynxy},
  };
  // With theta^2 = q^{+-1} one of the two kinds has all scalars equal to 1.
  const TableName unit = ctx.theta_mode() == ThetaMode::SquareIsQ ? first : second;
  const std::string u(to_string(unit));
  out.push_back({u + ": nx -> y^-1 nz y^-1 (unit scalars)", fwd(unit, nx), ynzy});
  out.push_back({u + ": nz -> nx (unit scalars)", fwd(unit, nz), nx});
  out.push_back({u + "^-1: nx -> nz (unit scalars)", bwd(unit, nx), nz});
  out.push_back({u + "^-1: nz -> y^-1 nx y^-1 (unit scalars)", bwd(unit, nz), ynxy});
  return out;
}

inline CheckList verify_equitable_lusztig(const Module& mod) {
  return verify_equitable_lusztig(mod, lusztig_operators(mod));
}

/// Which inverse operator the (theta mode, identification) cell pairs with:
/// T^{-1} when theta^2 = q with primary or theta^2 = q^{-1} with secondary,
/// (T^vee)^{-1} otherwise.
inline bool cell_uses_T(const QContext& ctx) {
  return (ctx.theta_mode() == ThetaMode::SquareIsQ) == (ctx.ident() == IdentKind::Primary);
}

/// (-1)^d theta^{d^2} when theta^2 = q, theta^{-d^2} when theta^2 = q^{-1}.
inline Rational tau_scalar(int d, const QContext& ctx) {
  const std::int64_t d2 = static_cast<std::int64_t>(d) * d;
  if (ctx.theta_mode() == ThetaMode::SquareIsQ) return sign_power(d) * pow(ctx.theta(), d2);
  return pow(ctx.theta(), -d2);
}

/// tau_y equals tau_scalar(d) times T^{-1} or (T^vee)^{-1} according to the cell.
inline CheckList verify_tau_lu(const Module& mod, const LusztigOperators& ops) {
  detail::require_irreducible_type_one(mod);
  const QContext& ctx = mod.context();
  const bool use_t = cell_uses_T(ctx);
  const Matrix& target = use_t ? ops.T_inv : ops.T_vee_inv;
  const auto tau = tau_maps(mod);
  return {{std::string("tau_y = ") + (ctx.theta_mode() == ThetaMode::SquareIsQ
                                          ? "(-1)^d theta^(d^2) "
                                          : "theta^(-d^2) ") +
               (use_t ? "T^-1" : "Tvee^-1"),
           tau.tau_y, tau_scalar(mod.diameter(), ctx) * target}};
}

inline CheckList verify_tau_lu(const Module& mod) { return verify_tau_lu(mod, lusztig_operators(mod)); }

inline CheckList verify_tau_lu(int d, const QContext& ctx) {
  return verify_tau_lu(chevalley_module(d, 1, ctx));
}

/// T^{-1} or (T^vee)^{-1} (per cell) equals exp_q(n_z) R on any type-1 module.
inline CheckList verify_main_theorem(const Module& mod, const LusztigOperators& ops) {
  require_type_one(mod);
  const QContext& ctx = mod.context();
  const bool use_t = cell_uses_T(ctx);
  return {{std::string(use_t ? "T^-1" : "Tvee^-1") + " = exp_q(nz) R",
           use_t ? ops.T_inv : ops.T_vee_inv, exp_q(mod[Symbol::n_z], ctx) * frak_r(mod)}};
}

inline CheckList verify_main_theorem(const Module& mod) {
  return verify_main_theorem(mod, lusztig_operators(mod));
}

}  // namespace uqsl2
