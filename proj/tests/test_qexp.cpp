#include <gtest/gtest.h>

#include "support.hpp"

using namespace uqsl2;
using namespace testing_support;

TEST(ExpQ, ZeroGivesIdentity) {
  EXPECT_EQ(exp_q(Matrix::zero(3), ctx4()), Matrix::identity(3));
  EXPECT_EQ(exp_q_inverse(Matrix::zero(3), ctx4()), Matrix::identity(3));
}

TEST(ExpQ, DiameterOneNz) {
  const auto ctx = ctx4();
  const auto m = equitable_module(1, 1, ctx);
  const Matrix& nz = m[Symbol::n_z];
  EXPECT_EQ(exp_q(nz, ctx), Matrix::from_rows({{1, -1}, {0, 1}}));
  EXPECT_EQ(exp_q_inverse(nz, ctx), Matrix::identity(2) - nz);
}

TEST(ExpQ, ThreeTermSumOnDiameterTwo) {
  const auto ctx = ctx4();
  const auto m = equitable_module(2, 1, ctx);
  const Matrix& nx = m[Symbol::n_x];
  const Matrix expected = Matrix::identity(3) + nx + (ctx.q() / qfact_sum(2, ctx.q())) * naive_mul(nx, nx);
  EXPECT_EQ(exp_q(nx, ctx), expected);
}

TEST(ExpQ, InverseMatchesMatrixInverse) {
  for (const auto& ctx : {ctx4(), ctx9()})
    for (int d = 0; d <= 6; ++d) {
      const auto m = equitable_module(d, 1, ctx);
      for (Symbol s : {Symbol::n_x, Symbol::n_y, Symbol::n_z})
        EXPECT_EQ(exp_q_inverse(m[s], ctx), mat_inverse(exp_q(m[s], ctx))) << "d=" << d;
    }
}

TEST(ExpQ, NonNilpotentInput) {
  EXPECT_ERROR_CODE(exp_q(Matrix::identity(2), ctx4()), ErrorCode::NotNilpotent);
}

TEST(ShiftIdentity, Examples) {
  const auto ctx = ctx4();
  EXPECT_TRUE(verify_shift_identity(Matrix::zero(2), ctx));
  EXPECT_TRUE(verify_shift_identity(equitable_module(1, 1, ctx)[Symbol::n_z], ctx));
  EXPECT_TRUE(verify_shift_identity(equitable_module(4, 1, ctx)[Symbol::n_x], ctx));
}

// Any strictly upper-triangular matrix is nilpotent, so the identity holds
// for random ones too.
TEST(ShiftIdentity, RandomNilpotent) {
  std::mt19937 rng(42);
  for (const auto& ctx : {ctx4(), ctx9()})
    for (int trial = 0; trial < 20; ++trial) {
      const std::size_t n = 1 + rng() % 6;
      Matrix m = random_matrix(rng, n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= i; ++j) m(i, j) = 0;
      EXPECT_TRUE(verify_shift_identity(m, ctx));
      EXPECT_EQ(exp_q(m, ctx) * exp_q_inverse(m, ctx), Matrix::identity(n));
    }
}

TEST(ConjugationSuite, TrivialModule) {
  const auto ctx = ctx4();
  for (const auto& c : conjugation_suite(chevalley_module(0, 1, ctx))) {
    EXPECT_TRUE(c.holds()) << c.name;
    EXPECT_EQ(c.lhs.rows(), 1u);
  }
}

TEST(ConjugationSuite, HoldsAcrossCells) {
  for (const auto& ctx : all_cells_q4())
    for (Basis b : {Basis::ChevalleyV, Basis::EquitableU})
      for (int d = 0; d <= 5; ++d) {
        const auto m = make_module(b, d, 1, ctx);
        for (const auto& c : conjugation_suite(m))
          EXPECT_TRUE(c.holds()) << c.name << " " << m.describe() << " " << ctx.describe() << " "
                                 << first_mismatch(c);
      }
}

TEST(ConjugationSuite, HoldsOnDirectSums) {
  const auto ctx = ctx9();
  const auto m = direct_sum_of(Basis::EquitableU, {1, 2, 3}, ctx);
  EXPECT_TRUE(all_hold(conjugation_suite(m)));
}

TEST(ConjugationSuite, PerturbedNzIsCaught) {
  const auto ctx = ctx4();
  for (int d = 1; d <= 4; ++d) {
    const auto m = equitable_module(d, 1, ctx);
    EXPECT_TRUE(all_hold(conjugation_suite(m)));
    EXPECT_FALSE(all_hold(conjugation_suite(perturb_nz(m)))) << "d=" << d;
  }
}
