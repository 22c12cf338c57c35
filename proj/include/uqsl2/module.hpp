#pragma once

// Finite-dimensional U_q(sl2)-modules: the irreducibles V_{d,eps} in the
// Chevalley basis {v_i} or the equitable basis {u_i}, and direct sums of
// type-1 irreducibles. Every module carries both generator sets (one native,
// the other obtained through the context's identification), the nu/n
// elements and the normalized Casimir.

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "uqsl2/expression.hpp"
#include "uqsl2/identification.hpp"

namespace uqsl2 {

enum class Basis { ChevalleyV, EquitableU };

constexpr std::string_view to_string(Basis b) {
  return b == Basis::ChevalleyV ? "chevalley" : "equitable";
}

inline Basis parse_basis(std::string_view s) {
  if (s == "chevalley") return Basis::ChevalleyV;
  if (s == "equitable") return Basis::EquitableU;
  throw Error(ErrorCode::ConfigError, "unknown basis '" + std::string(s) + "'");
}

struct Summand {
  int d = 0;
  int eps = 1;
  std::size_t offset = 0;
};

/// An irreducible V_{d,eps} (one summand) or a direct sum of type-1
/// irreducibles. Immutable after construction except through the explicit
/// with_generator() copy.
class Module {
 public:
  Module(Basis basis, std::vector<Summand> summands, GeneratorSet gens, QContext ctx)
      : basis_(basis), summands_(std::move(summands)), gens_(std::move(gens)), ctx_(std::move(ctx)) {}

  Basis basis() const { return basis_; }
  const std::vector<Summand>& summands() const { return summands_; }
  const GeneratorSet& generators() const { return gens_; }
  const Matrix& operator[](Symbol s) const { return gens_.at(s); }
  const QContext& context() const { return ctx_; }

  std::size_t dim() const { return gens_.dim(); }
  bool is_irreducible() const { return summands_.size() == 1; }
  bool is_type_one() const {
    for (const auto& s : summands_)
      if (s.eps != 1) return false;
    return true;
  }
  /// Diameter of an irreducible module.
  int diameter() const {
    if (!is_irreducible())
      throw Error(ErrorCode::ContractViolation, "diameter of a reducible module");
    return summands_.front().d;
  }
  int epsilon() const {
    if (!is_irreducible())
      throw Error(ErrorCode::ContractViolation, "epsilon of a reducible module");
    return summands_.front().eps;
  }

  /// Copy with one operator replaced; used for negative controls.
  Module with_generator(Symbol s, Matrix m) const {
    Module copy = *this;
    copy.gens_.set(s, std::move(m));
    return copy;
  }

  std::string describe() const {
    std::string s = std::string(to_string(basis_)) + " V";
    if (is_irreducible()) {
      s += "_{" + std::to_string(summands_.front().d) + "," +
           std::to_string(summands_.front().eps) + "}";
    } else {
      s += "[";
      for (std::size_t i = 0; i < summands_.size(); ++i)
        s += (i ? "," : "") + std::to_string(summands_[i].d);
      s += "]";
    }
    return s;
  }

 private:
  Basis basis_;
  std::vector<Summand> summands_;
  GeneratorSet gens_;
  QContext ctx_;
};

struct NuAndN {
  Matrix nu_x, nu_y, nu_z, n_x, n_y, n_z;
};

/// nu_x = q(1 - yz) = q^{-1}(1 - zy) and cyclically; n = nu / (q - q^{-1}).
/// Both forms of each nu are evaluated; disagreement is a construction bug.
inline NuAndN nu_and_n_matrices(const GeneratorSet& gens, const QContext& ctx) {
  const Matrix& x = gens.at(Symbol::x);
  const Matrix& y = gens.at(Symbol::y);
  const Matrix& z = gens.at(Symbol::z);
  const Matrix one = Matrix::identity(x.rows());
  auto nu = [&](const Matrix& a, const Matrix& b, const char* name) {
    Matrix left = ctx.q() * (one - a * b);
    Matrix right = ctx.q_inv() * (one - b * a);
    if (left != right)
      throw Error(ErrorCode::Inconsistent, std::string("two forms of ") + name + " disagree");
    return left;
  };
  NuAndN r;
  r.nu_x = nu(y, z, "nu_x");
  r.nu_y = nu(z, x, "nu_y");
  r.nu_z = nu(x, y, "nu_z");
  const Rational inv = 1 / ctx.q_minus_qinv();
  r.n_x = r.nu_x * inv;
  r.n_y = r.nu_y * inv;
  r.n_z = r.nu_z * inv;
  return r;
}

/// Lambda = (q - q^{-1})^2 ef + q^{-1} k + q k^{-1}.
inline Matrix casimir_matrix(const GeneratorSet& gens, const QContext& ctx) {
  const Rational c = ctx.q_minus_qinv() * ctx.q_minus_qinv();
  return c * (gens.at(Symbol::e) * gens.at(Symbol::f)) + ctx.q_inv() * gens.at(Symbol::k) +
         ctx.q() * gens.at(Symbol::k_inv);
}

/// The six equitable expressions for Lambda, in the order
///   qx+q^-1y+qz-qxyz,  q^-1x+qy+q^-1z-q^-1zyx,
///   qy+q^-1z+qx-qyzx,  q^-1y+qz+q^-1x-q^-1xzy,
///   qz+q^-1x+qy-qzxy,  q^-1z+qx+q^-1y-q^-1yxz.
inline std::vector<Matrix> casimir_six_forms(const GeneratorSet& gens, const QContext& ctx) {
  const Rational& q = ctx.q();
  const Rational& qi = ctx.q_inv();
  const Matrix& x = gens.at(Symbol::x);
  const Matrix& y = gens.at(Symbol::y);
  const Matrix& z = gens.at(Symbol::z);
  // Forms 1,3,5 cycle (x,y,z); forms 2,4,6 reverse the triple product.
  auto forward = [&](const Matrix& a, const Matrix& b, const Matrix& c) {
    return q * a + qi * b + q * c - q * (a * b * c);
  };
  auto backward = [&](const Matrix& a, const Matrix& b, const Matrix& c) {
    return qi * a + q * b + qi * c - qi * (c * b * a);
  };
  return {forward(x, y, z), backward(x, y, z), forward(y, z, x),
          backward(y, z, x), forward(z, x, y), backward(z, x, y)};
}

namespace detail {

inline void add_derived(GeneratorSet& g, const QContext& ctx) {
  auto nn = nu_and_n_matrices(g, ctx);
  g.set(Symbol::nu_x, std::move(nn.nu_x));
  g.set(Symbol::nu_y, std::move(nn.nu_y));
  g.set(Symbol::nu_z, std::move(nn.nu_z));
  g.set(Symbol::n_x, std::move(nn.n_x));
  g.set(Symbol::n_y, std::move(nn.n_y));
  g.set(Symbol::n_z, std::move(nn.n_z));
  g.set(Symbol::Lambda, casimir_matrix(g, ctx));
}

inline void require_diameter(int d, int eps) {
  if (d < 0) throw Error(ErrorCode::ContractViolation, "diameter must be >= 0");
  if (eps != 1 && eps != -1) throw Error(ErrorCode::ContractViolation, "epsilon must be +-1");
}

}  // namespace detail

/// Raw v-basis matrices: k v_i = eps q^{d-2i} v_i, f v_i = [i+1]_q v_{i+1},
/// e v_i = eps [d-i+1]_q v_{i-1}.
inline ChevalleyGenerators chevalley_generators(int d, int eps, const QContext& ctx) {
  detail::require_diameter(d, eps);
  const auto n = static_cast<std::size_t>(d + 1);
  ChevalleyGenerators g{Matrix(n, n), Matrix(n, n), Matrix(n, n), Matrix(n, n)};
  for (int i = 0; i <= d; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    g.k(ui, ui) = eps * ctx.q_pow(d - 2 * i);
    g.k_inv(ui, ui) = eps * ctx.q_pow(2 * i - d);
    if (i < d) g.f(ui + 1, ui) = q_int(i + 1, ctx);
    if (i > 0) g.e(ui - 1, ui) = eps * q_int(d - i + 1, ctx);
  }
  return g;
}

/// Raw u-basis matrices: x upper bidiagonal, y diagonal, z lower bidiagonal.
inline EquitableGenerators equitable_generators(int d, int eps, const QContext& ctx) {
  detail::require_diameter(d, eps);
  const auto n = static_cast<std::size_t>(d + 1);
  EquitableGenerators g{Matrix(n, n), Matrix(n, n), Matrix(n, n), Matrix(n, n)};
  const Rational qd = ctx.q_pow(d);
  const Rational qmd = ctx.q_pow(-d);
  for (int i = 0; i <= d; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    const Rational diag = eps * ctx.q_pow(2 * i - d);
    g.x(ui, ui) = diag;
    g.z(ui, ui) = diag;
    g.y(ui, ui) = eps * ctx.q_pow(d - 2 * i);
    g.y_inv(ui, ui) = eps * ctx.q_pow(2 * i - d);
    if (i < d) {
      g.x(ui, ui + 1) = eps * (qd - ctx.q_pow(2 * i - d));
      g.z(ui + 1, ui) = eps * (qmd - ctx.q_pow(2 * (i + 1) - d));
    }
  }
  return g;
}

inline Module chevalley_module(int d, int eps, const QContext& ctx) {
  const auto chev = chevalley_generators(d, eps, ctx);
  const auto eq = equitable_from_chevalley(chev, ctx);
  GeneratorSet g = to_generator_set(chev);
  const GeneratorSet realized = to_generator_set(eq);
  for (const auto& [s, m] : realized.all()) g.set(s, m);
  detail::add_derived(g, ctx);
  return Module(Basis::ChevalleyV, {Summand{d, eps, 0}}, std::move(g), ctx);
}

inline Module equitable_module(int d, int eps, const QContext& ctx) {
  const auto eq = equitable_generators(d, eps, ctx);
  const auto chev = chevalley_from_equitable(eq, ctx);
  GeneratorSet g = to_generator_set(eq);
  const GeneratorSet realized = to_generator_set(chev);
  for (const auto& [s, m] : realized.all()) g.set(s, m);
  detail::add_derived(g, ctx);
  return Module(Basis::EquitableU, {Summand{d, eps, 0}}, std::move(g), ctx);
}

inline Module make_module(Basis basis, int d, int eps, const QContext& ctx) {
  return basis == Basis::ChevalleyV ? chevalley_module(d, eps, ctx) : equitable_module(d, eps, ctx);
}

/// Block-diagonal direct sum of type-1 modules sharing basis and context.
inline Module direct_sum(const std::vector<Module>& parts) {
  if (parts.empty()) throw Error(ErrorCode::ContractViolation, "direct sum of no modules");
  const Basis basis = parts.front().basis();
  const QContext& ctx = parts.front().context();
  std::vector<Summand> summands;
  std::size_t offset = 0;
  for (const auto& p : parts) {
    if (p.basis() != basis) throw Error(ErrorCode::ContractViolation, "direct sum mixes bases");
    if (p.context().describe() != ctx.describe())
      throw Error(ErrorCode::ContractViolation, "direct sum mixes contexts");
    for (const auto& s : p.summands()) {
      if (s.eps != 1) throw Error(ErrorCode::MixedType, "summand with epsilon = -1");
      summands.push_back(Summand{s.d, s.eps, offset + s.offset});
    }
    offset += p.dim();
  }
  GeneratorSet g;
  for (const auto& [sym, _] : parts.front().generators().all()) {
    std::vector<Matrix> blocks;
    blocks.reserve(parts.size());
    for (const auto& p : parts) blocks.push_back(p[sym]);
    g.set(sym, block_diagonal(blocks));
  }
  return Module(basis, std::move(summands), std::move(g), ctx);
}

inline Module direct_sum_of(Basis basis, const std::vector<int>& diameters, const QContext& ctx) {
  std::vector<Module> parts;
  for (int d : diameters) parts.push_back(make_module(basis, d, 1, ctx));
  return direct_sum(parts);
}

/// Basis indices grouped by weight lambda, where k acts as q^lambda.
struct WeightDecomposition {
  std::map<int, std::vector<std::size_t>> spaces;
  std::vector<int> weight_of;  // per basis index
};

/// lambda with q^lambda == value, if any.
inline std::optional<int> integer_log(const Rational& value, const QContext& ctx) {
  if (sgn(value) == 0) return std::nullopt;
  const Rational target = abs(value);
  // Walk in the direction that moves |q^n| toward |value|.
  const Rational qa = abs(ctx.q());
  const int step = (target >= 1) == (qa > 1) ? 1 : -1;
  Rational p(1);
  const Rational factor = step == 1 ? ctx.q() : ctx.q_inv();
  for (int n = 0;; n += step) {
    if (p == value) return n;
    if (abs(p) > target && target >= 1) return std::nullopt;
    if (abs(p) < target && target < 1) return std::nullopt;
    p *= factor;
  }
}

/// Reads weights off the diagonal of k, which is diagonal in both the v- and
/// the u-basis realizations.
inline WeightDecomposition weight_decomposition(const Module& mod) {
  const Matrix& k = mod[Symbol::k];
  WeightDecomposition w;
  w.weight_of.resize(k.rows());
  for (std::size_t i = 0; i < k.rows(); ++i)
    for (std::size_t j = 0; j < k.cols(); ++j)
      if (i != j && sgn(k(i, j)) != 0)
        throw Error(ErrorCode::NonIntegralWeight, "k is not diagonal in this basis");
  for (std::size_t i = 0; i < k.rows(); ++i) {
    auto lambda = integer_log(k(i, i), mod.context());
    if (!lambda)
      throw Error(ErrorCode::NonIntegralWeight,
                  "k eigenvalue " + to_string(k(i, i)) + " is not an integer power of q");
    w.spaces[*lambda].push_back(i);
    w.weight_of[i] = *lambda;
  }
  return w;
}

inline void require_type_one(const Module& mod) {
  if (!mod.is_type_one()) throw Error(ErrorCode::NotTypeOne, mod.describe() + " is not type 1");
}

}  // namespace uqsl2
