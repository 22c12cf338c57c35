#pragma once

// Parameter sweeps over the verification suites, report records and
// operator emission for the command-line tool.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "uqsl2/lusztig.hpp"
#include "uqsl2/serialize.hpp"

namespace uqsl2 {

enum class Suite { Relations, Casimir, Identifications, QExp, Rotators, Lusztig, MainTheorem };

inline constexpr std::array<Suite, 7> kAllSuites = {
    Suite::Relations, Suite::Casimir, Suite::Identifications, Suite::QExp,
    Suite::Rotators,  Suite::Lusztig, Suite::MainTheorem};

constexpr std::string_view to_string(Suite s) {
  switch (s) {
    case Suite::Relations: return "relations";
    case Suite::Casimir: return "casimir";
    case Suite::Identifications: return "identifications";
    case Suite::QExp: return "qexp";
    case Suite::Rotators: return "rotators";
    case Suite::Lusztig: return "lusztig";
    case Suite::MainTheorem: return "main-theorem";
  }
  return "?";
}

/// Comma-separated suite names; "all" selects every suite. Result is in
/// canonical order without duplicates.
inline std::vector<Suite> parse_suites(std::string_view list) {
  std::vector<Suite> out;
  std::stringstream ss{std::string(list)};
  std::string item;
  bool any = false;
  while (std::getline(ss, item, ',')) {
    any = true;
    if (item == "all") return {kAllSuites.begin(), kAllSuites.end()};
    auto it = std::find_if(kAllSuites.begin(), kAllSuites.end(),
                           [&](Suite s) { return to_string(s) == item; });
    if (it == kAllSuites.end()) throw Error(ErrorCode::ConfigError, "unknown suite '" + item + "'");
    if (std::find(out.begin(), out.end(), *it) == out.end()) out.push_back(*it);
  }
  if (!any) throw Error(ErrorCode::ConfigError, "empty suite list");
  std::sort(out.begin(), out.end());
  return out;
}

/// "a..b" (inclusive) or a comma-separated list of integers.
inline std::vector<int> parse_int_range(std::string_view text) {
  const std::string s(text);
  auto to_int = [&](const std::string& v) {
    try {
      std::size_t used = 0;
      int n = std::stoi(v, &used);
      if (used != v.size()) throw std::invalid_argument(v);
      return n;
    } catch (const std::exception&) {
      throw Error(ErrorCode::ConfigError, "bad integer '" + v + "' in '" + s + "'");
    }
  };
  std::vector<int> out;
  if (auto dots = s.find(".."); dots != std::string::npos) {
    const int lo = to_int(s.substr(0, dots)), hi = to_int(s.substr(dots + 2));
    if (lo > hi) throw Error(ErrorCode::ConfigError, "empty range '" + s + "'");
    for (int v = lo; v <= hi; ++v) out.push_back(v);
    return out;
  }
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(to_int(item));
  if (out.empty()) throw Error(ErrorCode::ConfigError, "empty integer list");
  return out;
}

template <typename T, typename Parse>
std::vector<T> parse_list(std::string_view text, Parse parse) {
  std::vector<T> out;
  std::stringstream ss{std::string(text)};
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(parse(item));
    } catch (const Error& e) {
      throw Error(ErrorCode::ConfigError, e.what());
    }
  }
  if (out.empty()) throw Error(ErrorCode::ConfigError, "empty list '" + std::string(text) + "'");
  return out;
}

/// "1,3;0,2,2" -> {{1,3},{0,2,2}}.
inline std::vector<std::vector<int>> parse_profiles(std::string_view text) {
  std::vector<std::vector<int>> out;
  std::stringstream ss{std::string(text)};
  std::string item;
  while (std::getline(ss, item, ';'))
    if (!item.empty()) out.push_back(parse_int_range(item));
  return out;
}

/// Exact square root of a positive rational, if it has one.
inline std::optional<Rational> rational_sqrt(const Rational& r) {
  if (sgn(r) <= 0) return std::nullopt;
  const Integer& num = r.get_num();
  const Integer& den = r.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
    return std::nullopt;
  Integer n, d;
  mpz_sqrt(n.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(d.get_mpz_t(), den.get_mpz_t());
  Rational out(n, d);
  out.canonicalize();
  return out;
}

/// theta = -sqrt(q) for sq-q and 1/sqrt(q) for sq-qinv, so q^{1/2} = sqrt(q).
inline Rational default_theta(const Rational& q, ThetaMode mode) {
  const auto root = rational_sqrt(q);
  if (!root)
    throw Error(ErrorCode::ConfigError,
                "q = " + to_string(q) + " has no rational square root; pass theta explicitly");
  return mode == ThetaMode::SquareIsQ ? Rational(-*root) : Rational(1 / *root);
}

struct SuiteConfig {
  int d_max = 8;
  std::vector<Rational> q_values{Rational(4), Rational(9)};
  std::vector<ThetaMode> theta_modes{ThetaMode::SquareIsQ, ThetaMode::SquareIsQInverse};
  std::vector<int> t_values{-2, -1, 0, 1, 2};
  std::vector<IdentKind> ident_kinds{IdentKind::Primary, IdentKind::Secondary};
  std::vector<Suite> suites{kAllSuites.begin(), kAllSuites.end()};
  std::uint32_t seed = 42;
  std::vector<std::vector<int>> direct_sum_profiles{{1, 3}, {0, 2, 2}, {1, 2, 3}};
  std::size_t word_count = 100;
  int main_theorem_d_max = 6;
  /// Negative control: run every suite on modules whose n_z has one entry
  /// perturbed (modules of dimension 1 are left alone).
  bool perturb_nz = false;
  /// Worker threads; 0 means one per hardware thread.
  unsigned jobs = 0;
};

/// Every (q, theta mode, t, identification) context of the grid, in sweep order.
inline std::vector<QContext> grid_contexts(const SuiteConfig& cfg) {
  std::vector<QContext> out;
  for (const auto& q : cfg.q_values)
    for (ThetaMode mode : cfg.theta_modes) {
      const Rational theta = default_theta(q, mode);
      for (int t : cfg.t_values)
        for (IdentKind ident : cfg.ident_kinds) out.push_back(QContext::make(q, theta, mode, t, ident));
    }
  return out;
}

inline void validate(const SuiteConfig& cfg) {
  if (cfg.d_max < 0) throw Error(ErrorCode::ConfigError, "d-max must be >= 0");
  if (cfg.main_theorem_d_max < 0)
    throw Error(ErrorCode::ConfigError, "main theorem d-max must be >= 0");
  if (cfg.q_values.empty() || cfg.theta_modes.empty() || cfg.t_values.empty() ||
      cfg.ident_kinds.empty() || cfg.suites.empty())
    throw Error(ErrorCode::ConfigError, "every parameter list must be nonempty");
  for (const auto& p : cfg.direct_sum_profiles) {
    if (p.empty()) throw Error(ErrorCode::ConfigError, "empty direct-sum profile");
    for (int d : p)
      if (d < 0) throw Error(ErrorCode::ConfigError, "negative diameter in direct-sum profile");
  }
  (void)grid_contexts(cfg);
}

/// A list of identity checks sharing a topic label.
struct CheckGroup {
  std::string topic;
  CheckList checks;
};

using CheckGroups = std::vector<CheckGroup>;

/// The single-entry perturbation used by the negative controls: n_z(0, dim-1) += 1.
inline Module perturb_nz(const Module& mod) {
  Matrix nz = mod[Symbol::n_z];
  nz(0, mod.dim() - 1) += 1;
  return mod.with_generator(Symbol::n_z, std::move(nz));
}

namespace checks {

inline CheckGroups relations(const Module& mod) {
  const QContext& ctx = mod.context();
  CheckList out = relation_checks(chevalley_relations(ctx), mod.generators());
  auto eq = relation_checks(equitable_relations(ctx), mod.generators());
  out.insert(out.end(), eq.begin(), eq.end());
  return {{"relations", std::move(out)}};
}

inline CheckGroups casimir(const Module& mod) {
  const QContext& ctx = mod.context();
  const auto forms = casimir_six_forms(mod.generators(), ctx);
  CheckList out;
  if (mod.is_irreducible()) {
    const int d = mod.diameter();
    const Rational value = mod.epsilon() * (ctx.q_pow(d + 1) + ctx.q_pow(-d - 1));
    out.push_back({"Lambda = eps (q^(d+1) + q^(-d-1)) I", mod[Symbol::Lambda],
                   Matrix::scalar(mod.dim(), value)});
  }
  out.push_back({"Lambda form 1 = Lambda", forms[0], mod[Symbol::Lambda]});
  for (std::size_t i = 1; i < forms.size(); ++i)
    out.push_back({"Lambda form " + std::to_string(i + 1) + " = Lambda form 1", forms[i], forms[0]});
  return {{"casimir", std::move(out)}};
}

/// Round trip from the module's native generators through both maps, the
/// relations of each image, and the n_x / n_z cross-expressions.
inline CheckGroups identifications(const Module& mod) {
  const QContext& ctx = mod.context();
  CheckList out;
  auto add_relations = [&](CheckList rels, const std::string& prefix) {
    for (auto& c : rels) {
      c.name = prefix + c.name;
      out.push_back(std::move(c));
    }
  };
  if (mod.basis() == Basis::ChevalleyV) {
    const ChevalleyGenerators chev{mod[Symbol::e], mod[Symbol::f], mod[Symbol::k], mod[Symbol::k_inv]};
    const auto eq = equitable_from_chevalley(chev, ctx);
    add_relations(relation_checks(equitable_relations(ctx), to_generator_set(eq)), "forward image: ");
    const auto back = chevalley_from_equitable(eq, ctx);
    out.push_back({"inverse(forward(e)) = e", back.e, chev.e});
    out.push_back({"inverse(forward(f)) = f", back.f, chev.f});
    out.push_back({"inverse(forward(k)) = k", back.k, chev.k});
    out.push_back({"inverse(forward(kinv)) = kinv", back.k_inv, chev.k_inv});
  } else {
    const EquitableGenerators eq{mod[Symbol::x], mod[Symbol::y], mod[Symbol::y_inv], mod[Symbol::z]};
    const auto chev = chevalley_from_equitable(eq, ctx);
    add_relations(relation_checks(chevalley_relations(ctx), to_generator_set(chev)), "inverse image: ");
    const auto back = equitable_from_chevalley(chev, ctx);
    out.push_back({"forward(inverse(x)) = x", back.x, eq.x});
    out.push_back({"forward(inverse(y)) = y", back.y, eq.y});
    out.push_back({"forward(inverse(yinv)) = yinv", back.y_inv, eq.y_inv});
    out.push_back({"forward(inverse(z)) = z", back.z, eq.z});
  }
  auto forms = nxnz_chevalley_forms(mod.generators(), ctx);
  out.insert(out.end(), forms.begin(), forms.end());
  return {{"identifications", std::move(out)}};
}

inline CheckGroups qexp(const Module& mod) {
  const QContext& ctx = mod.context();
  CheckList out = conjugation_suite(mod);
  const Rational q2 = ctx.q() * ctx.q();
  const Matrix one = Matrix::identity(mod.dim());
  for (Symbol s : {Symbol::n_x, Symbol::n_y, Symbol::n_z}) {
    const Matrix& m = mod[s];
    const std::string n(to_string(s));
    out.push_back({"exp_q(q^2 " + n + ") (1 - (q^2-1) " + n + ") = exp_q(" + n + ")",
                   exp_q(m * q2, ctx) * (one - m * Rational(q2 - 1)), exp_q(m, ctx)});
    if (s != Symbol::n_z)
      out.push_back({"exp_q(" + n + ")^-1 exp_q(" + n + ") = I", exp_q_inverse(m, ctx) * exp_q(m, ctx),
                     one});
  }
  return {{"qexp", std::move(out)}};
}

inline CheckGroups rotators(const Module& mod) {
  const QContext& ctx = mod.context();
  if (!mod.is_irreducible()) return {{"rotator", rotator_law(frak_r(mod), mod, "R")}};
  const int d = mod.diameter();
  const RotatorKit kit = rotator_kit(mod);
  CheckList out = rotator_conjugations(mod, kit);
  const auto formulas = rotator_formulas(kit);
  for (std::size_t i = 1; i < formulas.size(); ++i)
    out.push_back({"Omega product form " + std::to_string(i + 1) + " = form 1", formulas[i], formulas[0]});
  const Matrix& omega = formulas[0];
  out.push_back({"Omega^3 = (-1)^d q^(d(d-1)) I", omega * omega * omega,
                 Matrix::scalar(mod.dim(), sign_power(d) * ctx.q_pow(static_cast<std::int64_t>(d) * (d - 1)))});
  const Matrix r = frak_r(mod);
  out.push_back({"R = q^(-d^2/2) Omega", r, q_half_power(-static_cast<std::int64_t>(d) * d, ctx) * omega});
  auto law = rotator_law(r, mod, "R");
  out.insert(out.end(), law.begin(), law.end());
  return {{"rotator", std::move(out)}, {"tau", tau_checks(mod, kit)}};
}

inline CheckGroups lusztig(const Module& mod, const std::vector<Word>& words) {
  const QContext& ctx = mod.context();
  const auto ops = lusztig_operators(mod);
  CheckGroups out;

  CheckList structure = lusztig_structure_checks(mod, ops);
  auto ttv = verify_tt_vee_relation(mod, ops);
  structure.insert(structure.end(), ttv.begin(), ttv.end());
  if (mod.is_irreducible() && mod.basis() == Basis::ChevalleyV) {
    const auto oracle = lusztig_T_oracle(mod.diameter(), ctx);
    structure.push_back({"T = closed form", ops.T, oracle.T});
    structure.push_back({"Tvee = closed form", ops.T_vee, oracle.T_vee});
    structure.push_back({"T^-1 = closed form", ops.T_inv, oracle.T_inv});
    structure.push_back({"Tvee^-1 = closed form", ops.T_vee_inv, oracle.T_vee_inv});
  }
  out.push_back({"lusztig-operators", std::move(structure)});

  // Random words exercise L and Lvee on direct sums; the inverse tables are
  // pinned down by the generators alone.
  const std::vector<Word> gen_words{{Symbol::e}, {Symbol::f}, {Symbol::k}, {Symbol::k_inv}};
  std::vector<Word> all_words = gen_words;
  if (!mod.is_irreducible()) all_words.insert(all_words.end(), words.begin(), words.end());
  CheckList conj;
  for (TableName t : {TableName::L, TableName::LVee, TableName::LInv, TableName::LVeeInv}) {
    const bool forward = t == TableName::L || t == TableName::LVee;
    auto c = verify_conjugation(mod, automorphism_table(t), forward ? all_words : gen_words, ops);
    conj.insert(conj.end(), std::make_move_iterator(c.begin()), std::make_move_iterator(c.end()));
  }
  auto square = verify_commuting_square(mod);
  conj.insert(conj.end(), square.begin(), square.end());
  auto homs = verify_table_homomorphisms(mod);
  conj.insert(conj.end(), homs.begin(), homs.end());
  out.push_back({"conjugation", std::move(conj)});

  out.push_back({"equitable-lusztig", verify_equitable_lusztig(mod, ops)});
  if (mod.is_irreducible()) out.push_back({"tau-lu", verify_tau_lu(mod, ops)});
  return out;
}

inline CheckGroups main_theorem(const Module& mod) {
  return {{"main-theorem", verify_main_theorem(mod)}};
}

}  // namespace checks

/// The checks one suite runs on one module.
inline CheckGroups suite_checks(Suite suite, const Module& mod, const std::vector<Word>& words) {
  switch (suite) {
    case Suite::Relations: return checks::relations(mod);
    case Suite::Casimir: return checks::casimir(mod);
    case Suite::Identifications: return checks::identifications(mod);
    case Suite::QExp: return checks::qexp(mod);
    case Suite::Rotators: return checks::rotators(mod);
    case Suite::Lusztig: return checks::lusztig(mod, words);
    case Suite::MainTheorem: return checks::main_theorem(mod);
  }
  return {};
}

struct CheckRecord {
  std::string suite;
  std::string topic;
  std::string identity;
  Json params;  // context, basis, d (int or summand list), epsilon
  bool pass = false;
  std::string mismatch;  // first differing entry, or the error raised
};

struct Report {
  std::vector<CheckRecord> records;
  std::size_t total = 0, passed = 0, failed = 0;
  double seconds = 0;

  bool ok() const { return failed == 0; }
};

inline Json module_params(const Module& mod) {
  Json p = to_json(mod.context());
  p["basis"] = std::string(to_string(mod.basis()));
  if (mod.is_irreducible()) {
    p["d"] = mod.diameter();
    p["epsilon"] = mod.epsilon();
  } else {
    Json ds = Json::array();
    for (const auto& s : mod.summands()) ds.push_back(s.d);
    p["d"] = std::move(ds);
    p["epsilon"] = 1;
  }
  return p;
}

/// Runs one suite on one module, turning any raised error into a failed record.
inline std::vector<CheckRecord> run_on_module(Suite suite, const Module& mod,
                                              const std::vector<Word>& words) {
  std::vector<CheckRecord> out;
  const std::string sname(to_string(suite));
  const Json params = module_params(mod);
  try {
    for (auto& group : suite_checks(suite, mod, words))
      for (const auto& c : group.checks) {
        const bool pass = c.holds();
        out.push_back({sname, group.topic, c.name, params, pass, pass ? "" : first_mismatch(c)});
      }
  } catch (const Error& e) {
    out.push_back({sname, sname, "evaluation", params, false,
                   std::string(to_string(e.code())) + ": " + e.what()});
  }
  return out;
}

/// Modules a suite visits for one context, in sweep order.
inline std::vector<Module> suite_modules(Suite suite, const QContext& ctx, const SuiteConfig& cfg) {
  std::vector<Module> out;
  const bool all_eps = suite == Suite::Relations || suite == Suite::Casimir ||
                       suite == Suite::Identifications;
  const int d_max = suite == Suite::MainTheorem ? std::min(cfg.d_max, cfg.main_theorem_d_max)
                                                : cfg.d_max;
  for (Basis b : {Basis::ChevalleyV, Basis::EquitableU})
    for (int d = 0; d <= d_max; ++d)
      for (int eps : {1, -1}) {
        if (eps == -1 && !all_eps) continue;
        out.push_back(make_module(b, d, eps, ctx));
      }
  if (suite == Suite::Casimir || suite == Suite::Identifications) return out;
  for (Basis b : {Basis::ChevalleyV, Basis::EquitableU})
    for (const auto& profile : cfg.direct_sum_profiles)
      if (*std::max_element(profile.begin(), profile.end()) <= cfg.d_max)
        out.push_back(direct_sum_of(b, profile, ctx));
  return out;
}

/// Runs `tasks` on up to `jobs` threads; results keep task order.
template <typename Result>
std::vector<Result> run_tasks(const std::vector<std::function<Result()>>& tasks, unsigned jobs) {
  std::vector<Result> results(tasks.size());
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(tasks.size(), 1)));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) results[i] = tasks[i]();
  };
  if (jobs <= 1) {
    worker();
    return results;
  }
  std::vector<std::thread> pool;
  for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  return results;
}

/// Every selected suite over the full grid. Records are ordered by suite,
/// then context, then module, independent of the number of workers.
inline Report run_suites(const SuiteConfig& cfg) {
  validate(cfg);
  const auto start = std::chrono::steady_clock::now();
  const auto contexts = grid_contexts(cfg);
  const auto words = random_words(cfg.seed, cfg.word_count);

  std::vector<std::function<std::vector<CheckRecord>()>> tasks;
  for (Suite suite : cfg.suites)
    for (const auto& ctx : contexts)
      tasks.push_back([suite, ctx, &cfg, &words] {
        std::vector<CheckRecord> out;
        for (const auto& mod : suite_modules(suite, ctx, cfg)) {
          auto recs = run_on_module(
              suite, cfg.perturb_nz && mod.dim() > 1 ? perturb_nz(mod) : mod, words);
          out.insert(out.end(), std::make_move_iterator(recs.begin()),
                     std::make_move_iterator(recs.end()));
        }
        return out;
      });

  Report report;
  for (auto& chunk : run_tasks(tasks, cfg.jobs))
    for (auto& r : chunk) report.records.push_back(std::move(r));
  report.total = report.records.size();
  for (const auto& r : report.records) (r.pass ? report.passed : report.failed)++;
  report.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

inline Json to_json(const CheckRecord& r) {
  Json j{{"identity", r.identity}, {"d", r.params.at("d")}, {"pass", r.pass},
         {"suite", r.suite},       {"topic", r.topic},        {"params", r.params}};
  if (!r.pass) j["mismatch"] = r.mismatch;
  return j;
}

/// JSON array of check records.
inline std::string format_json(const Report& report) {
  Json arr = Json::array();
  for (const auto& r : report.records) arr.push_back(to_json(r));
  return arr.dump(2) + "\n";
}

/// Failures first, then passes, then the summary line. Wall time is left out
/// so identical configs give identical text.
inline std::string format_text(const Report& report) {
  std::ostringstream os;
  auto line = [&](const CheckRecord& r) {
    os << (r.pass ? "PASS" : "FAIL") << " [" << r.suite << "/" << r.topic << "] " << r.identity
       << " | " << r.params.dump();
    if (!r.pass) os << " | " << r.mismatch;
    os << "\n";
  };
  for (const auto& r : report.records)
    if (!r.pass) line(r);
  for (const auto& r : report.records)
    if (r.pass) line(r);
  os << "summary: total " << report.total << ", passed " << report.passed << ", failed "
     << report.failed << "\n";
  return os.str();
}

inline constexpr std::array<std::string_view, 24> kEmittableOperators = {
    "e",     "f",       "k",     "x",    "y",    "z",    "nx",   "ny",
    "nz",    "Lambda",  "G",     "X",    "Y",    "Z",    "Omega", "Upsilon",
    "FrakR", "taux",    "tauy",  "tauz", "T",    "Tvee", "Tinv", "TveeInv"};

/// Tagged JSON for one named operator on V_{d,eps} in the given basis.
inline Json emit_operator(std::string_view what, int d, int eps, Basis basis, const QContext& ctx) {
  if (std::find(kEmittableOperators.begin(), kEmittableOperators.end(), what) ==
      kEmittableOperators.end())
    throw Error(ErrorCode::UnknownOperator, "unknown operator '" + std::string(what) + "'");
  const std::string name(what);
  if (name == "G") return tagged(name, standard_polynomial(d, ctx));
  const Module mod = make_module(basis, d, eps, ctx);
  if (auto sym = parse_symbol(name)) return tagged(name, mod[*sym]);
  require_type_one(mod);
  if (name == "X" || name == "Y" || name == "Z") {
    const auto caps = cap_operators(mod);
    return tagged(name, name == "X" ? caps.X : name == "Y" ? caps.Y : caps.Z);
  }
  if (name == "Omega") return tagged(name, standard_rotator(mod));
  if (name == "Upsilon") return tagged(name, upsilon(mod));
  if (name == "FrakR") return tagged(name, frak_r(mod));
  if (name == "taux" || name == "tauy" || name == "tauz") {
    const auto tau = tau_maps(mod);
    return tagged(name, name == "taux" ? tau.tau_x : name == "tauy" ? tau.tau_y : tau.tau_z);
  }
  for (LusztigKind k : {LusztigKind::T, LusztigKind::TVee, LusztigKind::TInv, LusztigKind::TVeeInv})
    if (to_string(k) == name) return tagged(name, lusztig_operator(mod, k));
  throw Error(ErrorCode::UnknownOperator, "unknown operator '" + name + "'");
}

}  // namespace uqsl2
