#include <gtest/gtest.h>

#include "support.hpp"

using namespace uqsl2;
using namespace testing_support;

namespace {

SuiteConfig small_config() {
  SuiteConfig cfg;
  cfg.d_max = 2;
  cfg.q_values = {Rational(4)};
  cfg.t_values = {-1, 0};
  cfg.direct_sum_profiles = {{1, 2}};
  cfg.word_count = 10;
  cfg.jobs = 1;
  return cfg;
}

}  // namespace

TEST(Parsing, SuitesRangesAndProfiles) {
  EXPECT_EQ(parse_suites("all").size(), kAllSuites.size());
  EXPECT_EQ(parse_suites("lusztig,qexp,qexp"), (std::vector<Suite>{Suite::QExp, Suite::Lusztig}));
  EXPECT_ERROR_CODE(parse_suites("qexp,nope"), ErrorCode::ConfigError);
  EXPECT_EQ(parse_int_range("-2..2"), (std::vector<int>{-2, -1, 0, 1, 2}));
  EXPECT_EQ(parse_int_range("3,-1"), (std::vector<int>{3, -1}));
  EXPECT_ERROR_CODE(parse_int_range("2..1"), ErrorCode::ConfigError);
  EXPECT_ERROR_CODE(parse_int_range("x"), ErrorCode::ConfigError);
  EXPECT_EQ(parse_profiles("1,3;0,2,2"), (std::vector<std::vector<int>>{{1, 3}, {0, 2, 2}}));
}

TEST(DefaultTheta, ExactSquareRoots) {
  EXPECT_EQ(default_theta(4, ThetaMode::SquareIsQ), -2);
  EXPECT_EQ(default_theta(4, ThetaMode::SquareIsQInverse), Rational(1, 2));
  EXPECT_EQ(default_theta(Rational(9, 4), ThetaMode::SquareIsQ), Rational(-3, 2));
  EXPECT_ERROR_CODE(default_theta(2, ThetaMode::SquareIsQ), ErrorCode::ConfigError);
  EXPECT_ERROR_CODE(default_theta(-4, ThetaMode::SquareIsQ), ErrorCode::ConfigError);
}

TEST(RunSuites, DiameterZeroPasses) {
  SuiteConfig cfg;
  cfg.d_max = 0;
  cfg.jobs = 1;
  const auto report = run_suites(cfg);
  EXPECT_GT(report.total, 0u);
  EXPECT_EQ(report.failed, 0u);
  EXPECT_EQ(report.total, report.passed + report.failed);
  for (const auto& r : report.records) {
    EXPECT_EQ(r.params.at("d"), 0);
    EXPECT_TRUE(r.pass) << r.identity;
  }
}

TEST(RunSuites, SmallGridPassesAndCoversEverySuite) {
  const auto report = run_suites(small_config());
  EXPECT_EQ(report.failed, 0u);
  std::set<std::string> suites;
  for (const auto& r : report.records) suites.insert(r.suite);
  EXPECT_EQ(suites.size(), kAllSuites.size());
}

TEST(RunSuites, DeterministicAcrossRunsAndWorkerCounts) {
  auto cfg = small_config();
  const std::string a = format_json(run_suites(cfg));
  const std::string b = format_json(run_suites(cfg));
  cfg.jobs = 3;
  const std::string c = format_json(run_suites(cfg));
  EXPECT_EQ(a, b);
  EXPECT_EQ(a, c);
  cfg.jobs = 1;
  EXPECT_EQ(format_text(run_suites(cfg)), format_text(run_suites(cfg)));
}

TEST(RunSuites, ConfigErrors) {
  SuiteConfig cfg;
  cfg.q_values = {Rational(1)};
  EXPECT_ERROR_CODE(run_suites(cfg), ErrorCode::ConfigError);
  cfg.q_values = {Rational(4)};
  cfg.d_max = -1;
  EXPECT_ERROR_CODE(run_suites(cfg), ErrorCode::ConfigError);
  cfg.d_max = 1;
  cfg.direct_sum_profiles = {{}};
  EXPECT_ERROR_CODE(run_suites(cfg), ErrorCode::ConfigError);
  cfg.direct_sum_profiles = {};
  cfg.t_values = {};
  EXPECT_ERROR_CODE(run_suites(cfg), ErrorCode::ConfigError);
}

TEST(RunSuites, PerturbationFailsAndTextListsFailuresFirst) {
  auto cfg = small_config();
  cfg.suites = {Suite::QExp, Suite::Rotators, Suite::MainTheorem};
  cfg.perturb_nz = true;
  const auto report = run_suites(cfg);
  std::set<std::string> failing;
  for (const auto& r : report.records)
    if (!r.pass) failing.insert(r.suite);
  EXPECT_EQ(failing, (std::set<std::string>{"qexp", "rotators", "main-theorem"}));
  const std::string text = format_text(report);
  EXPECT_EQ(text.rfind("FAIL", 0), 0u);
  EXPECT_LT(text.rfind("FAIL"), text.find("PASS"));
  EXPECT_NE(text.find("summary: total " + std::to_string(report.total)), std::string::npos);
}

TEST(ReportJson, RecordShape) {
  auto cfg = small_config();
  cfg.d_max = 1;
  cfg.suites = {Suite::Casimir};
  const auto report = run_suites(cfg);
  const Json arr = Json::parse(format_json(report));
  ASSERT_TRUE(arr.is_array());
  ASSERT_EQ(arr.size(), report.total);
  const Json& first = arr.front();
  EXPECT_TRUE(first.at("identity").is_string());
  EXPECT_TRUE(first.at("d").is_number_integer());
  EXPECT_TRUE(first.at("pass").get<bool>());
  EXPECT_EQ(first.at("suite"), "casimir");
  EXPECT_EQ(first.at("params").at("q"), "4/1");
}

TEST(Serialize, MatrixRoundTrip) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const Matrix m = random_matrix(rng, 1 + rng() % 4, 1 + rng() % 4);
    EXPECT_EQ(matrix_from_json(Json::parse(to_json(m).dump())), m);
  }
  EXPECT_ERROR_CODE(matrix_from_json(Json::parse(R"({"rows":1,"cols":2,"entries":[["1"]]})")),
                    ErrorCode::ParseError);
  EXPECT_ERROR_CODE(matrix_from_json(Json::parse(R"({"rows":1,"cols":1,"entries":[["1/0"]]})")),
                    ErrorCode::ParseError);
}

TEST(Serialize, ContextAndModuleForms) {
  const auto ctx = ctx4_inv(IdentKind::Secondary, -2);
  const Json j = to_json(ctx);
  EXPECT_EQ(j.dump(), R"({"q":"4/1","theta":"1/2","theta_mode":"sq-qinv","t":-2,"ident":"secondary"})");
  EXPECT_EQ(context_from_json(j).describe(), ctx.describe());
  const Json mod = to_json(chevalley_module(1, -1, ctx4()));
  EXPECT_EQ(mod.at("d"), 1);
  EXPECT_EQ(mod.at("epsilon"), -1);
  EXPECT_EQ(mod.at("basis"), "chevalley");
  EXPECT_EQ(mod.at("generators").at("k").at("entries")[0][0], "-4/1");
}

TEST(EmitOperator, Examples) {
  const auto ctx = ctx4();
  const Json k = emit_operator("k", 1, 1, Basis::ChevalleyV, ctx);
  EXPECT_EQ(k.at("operator"), "k");
  EXPECT_EQ(k.at("matrix").at("entries")[0][0], "4/1");
  EXPECT_EQ(k.at("matrix").at("entries")[1][1], "1/4");
  const Json om = emit_operator("Omega", 0, 1, Basis::ChevalleyV, ctx);
  EXPECT_EQ(om.at("matrix").at("entries"), Json::parse(R"([["1/1"]])"));
  const Json t = emit_operator("T", 1, 1, Basis::ChevalleyV, ctx);
  EXPECT_EQ(t.at("matrix").at("entries")[1][0], "-4/1");
  EXPECT_EQ(t.at("matrix").at("entries")[0][1], "1/1");
  const Json g = emit_operator("G", 2, 1, Basis::ChevalleyV, ctx);
  EXPECT_EQ(g.at("polynomial").at("degree"), 2);
}

TEST(EmitOperator, EveryNameEmits) {
  const auto ctx = ctx4();
  for (auto name : kEmittableOperators)
    for (Basis b : {Basis::ChevalleyV, Basis::EquitableU})
      EXPECT_NO_THROW(emit_operator(name, 2, 1, b, ctx)) << name;
}

TEST(EmitOperator, Errors) {
  const auto ctx = ctx4();
  EXPECT_ERROR_CODE(emit_operator("W", 1, 1, Basis::ChevalleyV, ctx), ErrorCode::UnknownOperator);
  EXPECT_ERROR_CODE(emit_operator("kinv", 1, 1, Basis::ChevalleyV, ctx), ErrorCode::UnknownOperator);
  EXPECT_ERROR_CODE(emit_operator("Omega", 1, -1, Basis::ChevalleyV, ctx), ErrorCode::NotTypeOne);
  EXPECT_ERROR_CODE(emit_operator("T", 1, -1, Basis::EquitableU, ctx), ErrorCode::NotTypeOne);
  EXPECT_NO_THROW(emit_operator("k", 1, -1, Basis::ChevalleyV, ctx));
}
