#include <gtest/gtest.h>

#include "support.hpp"

using namespace uqsl2;
using namespace testing_support;

TEST(LusztigT, SmallModules) {
  const auto ctx = ctx4();
  for (LusztigKind k : {LusztigKind::T, LusztigKind::TVee, LusztigKind::TInv, LusztigKind::TVeeInv})
    EXPECT_EQ(lusztig_operator(chevalley_module(0, 1, ctx), k), Matrix::identity(1));
  EXPECT_EQ(lusztig_T(chevalley_module(1, 1, ctx)), Matrix::from_rows({{0, 1}, {-4, 0}}));
  EXPECT_EQ(lusztig_T(chevalley_module(2, 1, ctx))(1, 1), -16);
}

TEST(LusztigT, TripleSumMatchesClosedForm) {
  for (const auto& ctx : {ctx4(), ctx9()})
    for (int d = 0; d <= 8; ++d) {
      const auto m = chevalley_module(d, 1, ctx);
      const auto want = closed_form_T(d, ctx.q());
      EXPECT_EQ(lusztig_T(m), want.T) << "d=" << d;
      EXPECT_EQ(lusztig_T_vee(m), want.T_vee) << "d=" << d;
      EXPECT_EQ(lusztig_T_inv(m), want.T_inv) << "d=" << d;
      EXPECT_EQ(lusztig_T_vee_inv(m), want.T_vee_inv) << "d=" << d;
      const auto lib = lusztig_T_oracle(d, ctx);
      EXPECT_EQ(lib.T, want.T);
      EXPECT_EQ(lib.T_vee_inv, want.T_vee_inv);
    }
}

TEST(LusztigT, InversesOnDirectSums) {
  for (Basis b : {Basis::ChevalleyV, Basis::EquitableU}) {
    const auto m = direct_sum_of(b, {1, 3}, ctx4());
    const auto ops = lusztig_operators(m);
    EXPECT_EQ(ops.T * ops.T_inv, Matrix::identity(6));
    EXPECT_EQ(ops.T_vee * ops.T_vee_inv, Matrix::identity(6));
    EXPECT_TRUE(all_hold(lusztig_structure_checks(m, ops)));
  }
}

TEST(LusztigT, RequiresTypeOne) {
  EXPECT_ERROR_CODE(lusztig_T(chevalley_module(1, -1, ctx4())), ErrorCode::NotTypeOne);
}

TEST(TTVeeRelation, Examples) {
  const auto ctx = ctx4();
  EXPECT_EQ(lusztig_T(chevalley_module(0, 1, ctx)), lusztig_T_vee(chevalley_module(0, 1, ctx)));
  EXPECT_TRUE(all_hold(verify_tt_vee_relation(chevalley_module(1, 1, ctx))));
  EXPECT_TRUE(all_hold(verify_tt_vee_relation(direct_sum_of(Basis::ChevalleyV, {1, 3}, ctx))));
  EXPECT_TRUE(all_hold(verify_tt_vee_relation(direct_sum_of(Basis::EquitableU, {0, 2, 2}, ctx9()))));
}

TEST(Conjugation, GeneratorImages) {
  const auto ctx = ctx4();
  const auto m = chevalley_module(1, 1, ctx);
  const Matrix T = lusztig_T(m), Ti = lusztig_T_inv(m);
  EXPECT_EQ(T * m[Symbol::k] * Ti, m[Symbol::k_inv]);
  EXPECT_EQ(T * m[Symbol::e] * Ti, -(m[Symbol::f] * m[Symbol::k]));
  EXPECT_EQ(T * m[Symbol::f] * Ti, -(m[Symbol::k_inv] * m[Symbol::e]));
  const Matrix Tv = lusztig_T_vee(m), Tvi = lusztig_T_vee_inv(m);
  EXPECT_EQ(Tv * m[Symbol::e] * Tvi, -(m[Symbol::k] * m[Symbol::f]));
}

TEST(Conjugation, WordOnDirectSum) {
  const auto ctx = ctx4();
  const auto m = direct_sum_of(Basis::ChevalleyV, {1, 2}, ctx);
  const std::vector<Word> words{{Symbol::e, Symbol::f, Symbol::k}};
  for (TableName t : {TableName::L, TableName::LVee, TableName::LInv, TableName::LVeeInv})
    EXPECT_TRUE(all_hold(verify_conjugation(m, automorphism_table(t), words)));
}

TEST(Conjugation, RandomWordsAcrossCells) {
  const auto words = random_words(42, 25);
  for (const auto& ctx : {ctx4(), ctx4_inv(IdentKind::Secondary, 1), ctx9(IdentKind::Primary, -2)})
    for (Basis b : {Basis::ChevalleyV, Basis::EquitableU}) {
      const auto m = direct_sum_of(b, {1, 2, 3}, ctx);
      for (TableName t : {TableName::L, TableName::LVee})
        for (const auto& c : verify_conjugation(m, automorphism_table(t), words))
          EXPECT_TRUE(c.holds()) << c.name << " " << ctx.describe();
    }
}

TEST(Conjugation, WrongOperatorIsCaught) {
  const auto ctx = ctx4();
  const auto m = chevalley_module(2, 1, ctx);
  auto ops = lusztig_operators(m);
  std::swap(ops.T, ops.T_vee);
  std::swap(ops.T_inv, ops.T_vee_inv);
  const std::vector<Word> words{{Symbol::e}};
  EXPECT_FALSE(all_hold(verify_conjugation(m, automorphism_table(TableName::L), words, ops)));
}

TEST(RandomWords, DeterministicAndInRange) {
  const auto a = random_words(42, 100), b = random_words(42, 100), c = random_words(43, 100);
  EXPECT_EQ(a, b);
  EXPECT_NE(a, c);
  for (const auto& w : a) {
    EXPECT_GE(w.size(), 1u);
    EXPECT_LE(w.size(), 6u);
  }
}

TEST(CommutingSquare, Holds) {
  for (const auto& ctx : {ctx4(), ctx9()})
    for (int d = 0; d <= 4; ++d) EXPECT_TRUE(all_hold(verify_commuting_square(chevalley_module(d, 1, ctx))));
}

TEST(TableHomomorphisms, Hold) {
  for (const auto& ctx : {ctx4(), ctx9()})
    for (Basis b : {Basis::ChevalleyV, Basis::EquitableU})
      EXPECT_TRUE(all_hold(verify_table_homomorphisms(make_module(b, 3, 1, ctx))));
}

TEST(EquitableLusztig, UnitScalarCases) {
  {
    const auto ctx = ctx4(IdentKind::Primary);
    const auto m = equitable_module(1, 1, ctx);
    const Matrix T = lusztig_T(m), Ti = lusztig_T_inv(m);
    EXPECT_EQ(T * m[Symbol::n_x] * Ti, m[Symbol::y_inv] * m[Symbol::n_z] * m[Symbol::y_inv]);
  }
  {
    const auto ctx = ctx4_inv(IdentKind::Secondary);
    const auto m = equitable_module(1, 1, ctx);
    const Matrix T = lusztig_T(m), Ti = lusztig_T_inv(m);
    EXPECT_EQ(T * m[Symbol::n_x] * Ti, m[Symbol::y_inv] * m[Symbol::n_z] * m[Symbol::y_inv]);
  }
}

TEST(EquitableLusztig, HoldAcrossCells) {
  for (const auto& ctx : all_cells_q4())
    for (int d = 0; d <= 4; ++d) {
      const auto m = equitable_module(d, 1, ctx);
      for (const auto& c : verify_equitable_lusztig(m))
        EXPECT_TRUE(c.holds()) << c.name << " d=" << d << " " << ctx.describe();
    }
}

TEST(TauLu, ScalarExamples) {
  EXPECT_EQ(tau_scalar(1, ctx4()), 2);
  EXPECT_EQ(tau_scalar(2, ctx4_inv(IdentKind::Secondary)), 16);
  {
    const auto ctx = ctx4();
    const auto m = chevalley_module(1, 1, ctx);
    EXPECT_EQ(tau_maps(m).tau_y, 2 * lusztig_T_inv(m));
  }
  {
    const auto ctx = ctx4_inv(IdentKind::Secondary);
    const auto m = chevalley_module(2, 1, ctx);
    EXPECT_EQ(tau_maps(m).tau_y, 16 * lusztig_T_inv(m));
  }
}

TEST(TauLu, AllFourCells) {
  for (const auto& ctx : all_cells_q4())
    for (int d = 0; d <= 6; ++d) EXPECT_TRUE(all_hold(verify_tau_lu(d, ctx))) << ctx.describe() << " d=" << d;
}

TEST(MainTheorem, Examples) {
  EXPECT_TRUE(all_hold(verify_main_theorem(chevalley_module(0, 1, ctx4()))));
  EXPECT_TRUE(all_hold(verify_main_theorem(equitable_module(2, 1, ctx4()))));
  const auto ctx = ctx4_inv(IdentKind::Secondary);
  EXPECT_TRUE(all_hold(verify_main_theorem(direct_sum_of(Basis::ChevalleyV, {1, 3, 0}, ctx))));
}

TEST(MainTheorem, PerturbedNzIsCaught) {
  const auto m = equitable_module(3, 1, ctx4());
  EXPECT_FALSE(all_hold(verify_main_theorem(perturb_nz(m))));
}
