#include <gtest/gtest.h>

#include "support.hpp"

using namespace uqsl2;
using namespace testing_support;

TEST(Rational, ParsesAndPrintsCanonically) {
  EXPECT_EQ(parse_rational("7"), Rational(7));
  EXPECT_EQ(to_string(parse_rational("7")), "7/1");
  EXPECT_EQ(to_string(parse_rational("6/4")), "3/2");
  EXPECT_EQ(to_string(parse_rational("-10/4")), "-5/2");
  EXPECT_EQ(to_string(parse_rational("0/9")), "0/1");
  EXPECT_EQ(to_string(parse_rational("+3")), "3/1");
}

TEST(Rational, RejectsMalformedText) {
  for (const char* bad : {"", "/", "1/", "/2", "a", "1/0", "1/-2", "1.5", "--1", "1/2/3"})
    EXPECT_ERROR_CODE(parse_rational(bad), ErrorCode::ParseError);
}

TEST(Rational, PowHandlesNegativeExponents) {
  EXPECT_EQ(uqsl2::pow(Rational(4), 0), 1);
  EXPECT_EQ(uqsl2::pow(Rational(4), -2), Rational(1, 16));
  EXPECT_EQ(uqsl2::pow(Rational(-2, 3), 3), Rational(-8, 27));
  EXPECT_ERROR_CODE(uqsl2::pow(Rational(0), -1), ErrorCode::ContractViolation);
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const long num = static_cast<long>(rng() % 11) - 5;
    if (num == 0) continue;
    Rational bb(num, static_cast<long>(rng() % 4) + 1);
    bb.canonicalize();
    const long n = static_cast<long>(rng() % 13) - 6;
    EXPECT_EQ(uqsl2::pow(bb, n), naive_pow(bb, n));
  }
}

TEST(QContext, RejectsDegenerateParameters) {
  for (long q : {0L, 1L, -1L})
    EXPECT_ERROR_CODE(QContext::make(q, 1, ThetaMode::SquareIsQ, 0, IdentKind::Primary),
                      ErrorCode::ConfigError);
  EXPECT_ERROR_CODE(QContext::make(4, 0, ThetaMode::SquareIsQ, 0, IdentKind::Primary),
                    ErrorCode::ConfigError);
  EXPECT_ERROR_CODE(QContext::make(4, 3, ThetaMode::SquareIsQ, 0, IdentKind::Primary),
                    ErrorCode::ConfigError);
  EXPECT_ERROR_CODE(QContext::make(4, -2, ThetaMode::SquareIsQInverse, 0, IdentKind::Primary),
                    ErrorCode::ConfigError);
}

TEST(QContext, ParsesModeAndKindNames) {
  EXPECT_EQ(parse_theta_mode("sq-q"), ThetaMode::SquareIsQ);
  EXPECT_EQ(parse_theta_mode("sq-qinv"), ThetaMode::SquareIsQInverse);
  EXPECT_EQ(parse_ident_kind("primary"), IdentKind::Primary);
  EXPECT_EQ(parse_ident_kind("secondary"), IdentKind::Secondary);
  EXPECT_ERROR_CODE(parse_theta_mode("sq"), ErrorCode::ConfigError);
  EXPECT_ERROR_CODE(parse_ident_kind("third"), ErrorCode::ConfigError);
}

TEST(QInt, SmallValues) {
  const auto ctx = ctx4();
  EXPECT_EQ(q_int(0, ctx), 0);
  EXPECT_EQ(q_int(1, ctx), 1);
  EXPECT_EQ(q_int(2, ctx), Rational(17, 4));
}

TEST(QInt, MatchesLaurentSumAndIsOdd) {
  for (const Rational& q : {Rational(4), Rational(9), Rational(1, 4)}) {
    Rational theta = q == Rational(1, 4) ? Rational(1, 2) : (q == 4 ? Rational(-2) : Rational(-3));
    const auto ctx = QContext::make(q, theta, ThetaMode::SquareIsQ, 0, IdentKind::Primary);
    for (long n = 0; n <= 12; ++n) {
      EXPECT_EQ(q_int(n, ctx), qint_sum(n, q)) << "n=" << n;
      EXPECT_EQ(q_int(-n, ctx), -q_int(n, ctx));
    }
  }
}

TEST(QFact, SmallValuesAndProducts) {
  const auto ctx = ctx4();
  EXPECT_EQ(q_fact(0, ctx), 1);
  EXPECT_EQ(q_fact(1, ctx), 1);
  EXPECT_EQ(q_fact(2, ctx), Rational(17, 4));
  for (long n = 0; n <= 10; ++n) EXPECT_EQ(q_fact(n, ctx), qfact_sum(n, ctx.q()));
  EXPECT_ERROR_CODE(q_fact(-1, ctx), ErrorCode::ContractViolation);
}

TEST(QHalfPower, SignConvention) {
  EXPECT_EQ(q_half_power(0, ctx4()), 1);
  EXPECT_EQ(q_half_power(1, ctx4()), 2);
  EXPECT_EQ(q_half_power(3, ctx4_inv()), 8);
  const auto neg = QContext::make(4, 2, ThetaMode::SquareIsQ, 0, IdentKind::Primary);
  EXPECT_EQ(q_half_power(1, neg), -2);
}

TEST(QHalfPower, AdditiveAndSquaresToQ) {
  for (const auto& ctx : all_cells_q4()) {
    EXPECT_EQ(q_half_power(2, ctx), ctx.q());
    for (long a = -5; a <= 5; ++a)
      for (long b = -5; b <= 5; ++b)
        EXPECT_EQ(q_half_power(a + b, ctx), q_half_power(a, ctx) * q_half_power(b, ctx));
  }
}
