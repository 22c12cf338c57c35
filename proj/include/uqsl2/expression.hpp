#pragma once

// Formal linear combinations of words over the generator alphabet, and their
// evaluation on a concrete set of operator matrices.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "uqsl2/matrix.hpp"

namespace uqsl2 {

enum class Symbol {
  e, f, k, k_inv,
  x, y, y_inv, z,
  nu_x, nu_y, nu_z,
  n_x, n_y, n_z,
  Lambda,
};

inline constexpr std::array<Symbol, 15> kAllSymbols = {
    Symbol::e,    Symbol::f,    Symbol::k,    Symbol::k_inv, Symbol::x,
    Symbol::y,    Symbol::y_inv, Symbol::z,   Symbol::nu_x,  Symbol::nu_y,
    Symbol::nu_z, Symbol::n_x,  Symbol::n_y,  Symbol::n_z,   Symbol::Lambda};

constexpr std::string_view to_string(Symbol s) {
  switch (s) {
    case Symbol::e: return "e";
    case Symbol::f: return "f";
    case Symbol::k: return "k";
    case Symbol::k_inv: return "kinv";
    case Symbol::x: return "x";
    case Symbol::y: return "y";
    case Symbol::y_inv: return "yinv";
    case Symbol::z: return "z";
    case Symbol::nu_x: return "nux";
    case Symbol::nu_y: return "nuy";
    case Symbol::nu_z: return "nuz";
    case Symbol::n_x: return "nx";
    case Symbol::n_y: return "ny";
    case Symbol::n_z: return "nz";
    case Symbol::Lambda: return "Lambda";
  }
  return "?";
}

inline std::optional<Symbol> parse_symbol(std::string_view name) {
  for (Symbol s : kAllSymbols)
    if (to_string(s) == name) return s;
  return std::nullopt;
}

/// Operator matrices keyed by generator symbol. Lookup of an absent symbol
/// is an UnknownSymbol error.
class GeneratorSet {
 public:
  void set(Symbol s, Matrix m) { mats_.insert_or_assign(s, std::move(m)); }
  bool has(Symbol s) const { return mats_.contains(s); }
  const Matrix& at(Symbol s) const {
    auto it = mats_.find(s);
    if (it == mats_.end())
      throw Error(ErrorCode::UnknownSymbol,
                  "no matrix for symbol '" + std::string(to_string(s)) + "'");
    return it->second;
  }
  const std::map<Symbol, Matrix>& all() const { return mats_; }
  std::size_t dim() const { return mats_.empty() ? 0 : mats_.begin()->second.rows(); }

 private:
  std::map<Symbol, Matrix> mats_;
};

using Word = std::vector<Symbol>;

struct Term {
  Rational coeff;
  Word word;
};

class AlgebraExpression {
 public:
  AlgebraExpression() = default;
  explicit AlgebraExpression(std::vector<Term> terms) : terms_(std::move(terms)) { drop_zeros(); }

  static AlgebraExpression one() { return scalar(Rational(1)); }
  static AlgebraExpression scalar(const Rational& c) { return AlgebraExpression({Term{c, {}}}); }
  static AlgebraExpression word(Word w, const Rational& c = Rational(1)) {
    return AlgebraExpression({Term{c, std::move(w)}});
  }
  static AlgebraExpression gen(Symbol s) { return word({s}); }

  const std::vector<Term>& terms() const { return terms_; }

  friend AlgebraExpression operator+(AlgebraExpression a, const AlgebraExpression& b) {
    a.terms_.insert(a.terms_.end(), b.terms_.begin(), b.terms_.end());
    return a;
  }
  friend AlgebraExpression operator-(AlgebraExpression a, const AlgebraExpression& b) {
    return std::move(a) + (Rational(-1) * b);
  }
  friend AlgebraExpression operator*(const Rational& c, AlgebraExpression a) {
    for (auto& t : a.terms_) t.coeff *= c;
    a.drop_zeros();
    return a;
  }
  // Concatenation of words, distributed over the terms; no reordering.
  friend AlgebraExpression operator*(const AlgebraExpression& a, const AlgebraExpression& b) {
    std::vector<Term> out;
    out.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& ta : a.terms_)
      for (const auto& tb : b.terms_) {
        Word w = ta.word;
        w.insert(w.end(), tb.word.begin(), tb.word.end());
        out.push_back(Term{ta.coeff * tb.coeff, std::move(w)});
      }
    return AlgebraExpression(std::move(out));
  }

  /// g^n for n >= 0 as a repeated word.
  static AlgebraExpression power(Symbol g, std::size_t n) { return word(Word(n, g)); }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& t : terms_) {
      if (!s.empty()) s += " + ";
      s += "(" + uqsl2::to_string(t.coeff) + ")";
      for (Symbol sym : t.word) s += "*" + std::string(uqsl2::to_string(sym));
    }
    return s;
  }

 private:
  void drop_zeros() {
    std::erase_if(terms_, [](const Term& t) { return sgn(t.coeff) == 0; });
  }
  std::vector<Term> terms_;
};

/// Product of the symbol matrices, left to right; the empty word is I.
inline Matrix eval_word(const Word& w, const GeneratorSet& gens, std::size_t dim) {
  if (w.empty()) return Matrix::identity(dim);
  Matrix acc = gens.at(w.front());
  for (std::size_t i = 1; i < w.size(); ++i) acc = acc * gens.at(w[i]);
  return acc;
}

inline Matrix eval_expression(const AlgebraExpression& expr, const GeneratorSet& gens) {
  const std::size_t n = gens.dim();
  Matrix sum = Matrix::zero(n);
  for (const auto& t : expr.terms()) sum += eval_word(t.word, gens, n) * t.coeff;
  return sum;
}

/// Replace each symbol that has an entry in `images` by that expression;
/// other symbols are kept as they are.
inline AlgebraExpression substitute(const AlgebraExpression& expr,
                                    const std::map<Symbol, AlgebraExpression>& images) {
  AlgebraExpression result;
  for (const auto& t : expr.terms()) {
    AlgebraExpression acc = AlgebraExpression::scalar(t.coeff);
    for (Symbol s : t.word) {
      auto it = images.find(s);
      acc = acc * (it == images.end() ? AlgebraExpression::gen(s) : it->second);
    }
    result = std::move(result) + acc;
  }
  return result;
}

}  // namespace uqsl2
