// uqsl2: run the verification suites or emit operator matrices as JSON.
//
// Exit codes: 0 all checks pass, 1 a check failed, 2 usage or config error.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "uqsl2/uqsl2.hpp"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw uqsl2::Error(uqsl2::ErrorCode::ConfigError, "cannot open '" + path + "'");
  out << text;
}

struct VerifyArgs {
  int d_max = 8;
  std::string q = "4,9";
  std::string theta_mode = "sq-q,sq-qinv";
  std::string t = "-2..2";
  std::string ident = "primary,secondary";
  std::string suite = "all";
  std::uint32_t seed = 42;
  std::string profiles = "1,3;0,2,2;1,2,3";
  std::size_t words = 100;
  unsigned jobs = 0;
  bool perturb_nz = false;
  std::string format = "text";
  std::string out;
};

struct EmitArgs {
  std::string what;
  int d = 1;
  int eps = 1;
  std::string basis = "chevalley";
  std::string q = "4";
  std::string theta;
  std::string theta_mode = "sq-q";
  int t = 0;
  std::string ident = "primary";
  std::string format = "json";
  std::string out;
};

int run_verify(const VerifyArgs& a) {
  using namespace uqsl2;
  SuiteConfig cfg;
  cfg.d_max = a.d_max;
  cfg.q_values = parse_list<Rational>(a.q, [](const std::string& s) { return parse_rational(s); });
  cfg.theta_modes = parse_list<ThetaMode>(a.theta_mode, [](const std::string& s) { return parse_theta_mode(s); });
  cfg.t_values = parse_int_range(a.t);
  cfg.ident_kinds = parse_list<IdentKind>(a.ident, [](const std::string& s) { return parse_ident_kind(s); });
  cfg.suites = parse_suites(a.suite);
  cfg.seed = a.seed;
  cfg.direct_sum_profiles = parse_profiles(a.profiles);
  cfg.word_count = a.words;
  cfg.jobs = a.jobs;
  cfg.perturb_nz = a.perturb_nz;

  const Report report = run_suites(cfg);
  write_output(a.out, a.format == "json" ? format_json(report) : format_text(report));
  std::cerr << "uqsl2 verify: " << report.passed << "/" << report.total << " checks passed, "
            << report.failed << " failed (" << report.seconds << " s)\n";
  return report.ok() ? 0 : kExitFailure;
}

int run_emit(const EmitArgs& a) {
  using namespace uqsl2;
  const Rational q = parse_rational(a.q);
  const ThetaMode mode = parse_theta_mode(a.theta_mode);
  const Rational theta = a.theta.empty() ? default_theta(q, mode) : parse_rational(a.theta);
  const QContext ctx = QContext::make(q, theta, mode, a.t, parse_ident_kind(a.ident));
  const Json j = emit_operator(a.what, a.d, a.eps, parse_basis(a.basis), ctx);
  write_output(a.out, j.dump(2) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of U_q(sl2) operator identities"};
  app.require_subcommand(1);

  VerifyArgs v;
  auto* verify = app.add_subcommand("verify", "Run verification suites over a parameter grid");
  verify->add_option("--d-max", v.d_max, "Largest diameter")->capture_default_str();
  verify->add_option("--q", v.q, "Comma-separated q values")->capture_default_str();
  verify->add_option("--theta-mode", v.theta_mode, "Subset of sq-q,sq-qinv")->capture_default_str();
  verify->add_option("--t", v.t, "Range a..b or comma list")->capture_default_str();
  verify->add_option("--ident", v.ident, "Subset of primary,secondary")->capture_default_str();
  verify->add_option("--suite", v.suite,
                     "relations,casimir,identifications,qexp,rotators,lusztig,main-theorem or all")
      ->capture_default_str();
  verify->add_option("--seed", v.seed, "Random word seed")->capture_default_str();
  verify->add_option("--profiles", v.profiles, "Direct-sum profiles, e.g. 1,3;0,2,2")->capture_default_str();
  verify->add_option("--words", v.words, "Random words per profile")->capture_default_str();
  verify->add_option("--jobs", v.jobs, "Worker threads (0 = all cores)")->capture_default_str();
  verify->add_flag("--perturb-nz", v.perturb_nz, "Negative control: perturb one entry of n_z");
  verify->add_option("--format", v.format, "Report format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  verify->add_option("--out", v.out, "Output path (default stdout)");

  EmitArgs e;
  auto* emit = app.add_subcommand("emit", "Emit one operator as tagged JSON");
  emit->add_option("--what", e.what, "Operator name")->required();
  emit->add_option("--d", e.d, "Diameter")->capture_default_str();
  emit->add_option("--eps", e.eps, "Type")->check(CLI::IsMember({1, -1}))->capture_default_str();
  emit->add_option("--basis", e.basis, "chevalley or equitable")->capture_default_str();
  emit->add_option("--q", e.q, "q")->capture_default_str();
  emit->add_option("--theta", e.theta, "theta (default derived from q and mode)");
  emit->add_option("--theta-mode", e.theta_mode, "sq-q or sq-qinv")->capture_default_str();
  emit->add_option("--t", e.t, "Identification exponent")->capture_default_str();
  emit->add_option("--ident", e.ident, "primary or secondary")->capture_default_str();
  emit->add_option("--format", e.format, "Output format")
      ->check(CLI::IsMember({"json"}))
      ->capture_default_str();
  emit->add_option("--out", e.out, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int rc = app.exit(err);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (*verify) return run_verify(v);
    return run_emit(e);
  } catch (const uqsl2::Error& err) {
    std::cerr << "error " << uqsl2::to_string(err.code()) << ": " << err.what() << "\n";
    return kExitUsage;
  }
}
