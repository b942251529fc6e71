#include <gtest/gtest.h>

#include "fglie/liealg.hpp"
#include "oracles.hpp"

using namespace fglie;

namespace {

QVector unit(int d, int i) {
  QVector v(static_cast<size_t>(d), 0);
  v[static_cast<size_t>(i)] = 1;
  return v;
}

} // namespace

TEST(LinearAlgebra, RankNullspaceSolve) {
  QMatrix m = QMatrix::from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}}, 3);
  EXPECT_EQ(rank(m), 2);
  auto ns = nullspace(m);
  ASSERT_EQ(ns.size(), 1u);
  EXPECT_TRUE(is_zero(m.apply(ns[0])));
  auto x = solve(m, {4, 8, 2});
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(m.apply(*x), (QVector{4, 8, 2}));
  EXPECT_FALSE(solve(m, {1, 0, 0}).has_value());
}

TEST(LinearAlgebra, SubspaceMembership) {
  Subspace s = Subspace::span(3, {{1, 1, 0}, {2, 2, 0}, {0, 1, 1}});
  EXPECT_EQ(s.dim(), 2);
  EXPECT_TRUE(s.contains(QVector{1, 2, 1}));
  EXPECT_FALSE(s.contains(QVector{0, 0, 1}));
  EXPECT_TRUE(Subspace::whole(3).contains(s));
  EXPECT_EQ(Subspace::span(3, {{1, 2, 1}, {1, 1, 0}}), s);
}

TEST(StructureConstants, Sl2Brackets) {
  StructureConstants L = algebras::sl2();
  EXPECT_EQ(L.bracket_of_basis(0, 1), (QVector{0, 2, 0}));
  EXPECT_EQ(L.bracket_of_basis(0, 2), (QVector{0, 0, -2}));
  EXPECT_EQ(L.bracket_of_basis(1, 2), (QVector{1, 0, 0}));
  EXPECT_EQ(L.bracket_of_basis(2, 1), (QVector{-1, 0, 0}));
  EXPECT_TRUE(check_jacobi(L).pass);
}

TEST(StructureConstants, KillingFormOfSl2) {
  QMatrix K = killing_form(algebras::sl2());
  EXPECT_EQ(K(0, 0), 8);
  EXPECT_EQ(K(1, 2), 4);
  EXPECT_EQ(K(2, 1), 4);
  EXPECT_EQ(K(0, 1), 0);
  EXPECT_EQ(K(1, 1), 0);
  EXPECT_EQ(rank(K), 3);
  EXPECT_TRUE(killing_form(algebras::heisenberg()).is_zero());
}

TEST(StructureConstants, JacobiFailureHasWitness) {
  StructureConstants L(3);
  L.set_bracket(0, 1, unit(3, 0));
  L.set_bracket(1, 2, unit(3, 1));
  JacobiReport r = check_jacobi(L);
  EXPECT_FALSE(r.pass);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(*r.witness, (std::array<int, 3>{0, 1, 2}));
  EXPECT_EQ(r.residual, (QVector{1, 0, 0}));
}

TEST(Series, LowerCentralAndDerived) {
  StructureConstants h = algebras::heisenberg();
  EXPECT_EQ(lower_central_series(h), (std::vector<int>{3, 1, 0}));
  EXPECT_EQ(nilpotency_class(h), 2);
  StructureConstants s = algebras::solvable2();
  EXPECT_EQ(lower_central_series(s), (std::vector<int>{2, 1, 1}));
  EXPECT_EQ(derived_series(s, Subspace::whole(2)), (std::vector<int>{2, 1, 0}));
  EXPECT_FALSE(is_nilpotent(s));
  EXPECT_TRUE(is_solvable(s, Subspace::whole(2)));
  EXPECT_FALSE(is_solvable(algebras::sl2(), Subspace::whole(3)));
  EXPECT_FALSE(nilpotency_class(algebras::sl2()).has_value());
}

TEST(FreeNilpotent, DimensionsFollowWitt) {
  for (auto [k, c] : {std::pair{2, 3}, std::pair{2, 5}, std::pair{3, 3}}) {
    StructureConstants L = algebras::free_nilpotent(k, c);
    long dim = 0;
    std::vector<int> expected_lcs;
    for (int n = 1; n <= c; ++n)
      dim += oracle::necklace_count(k, n);
    EXPECT_EQ(L.dimension(), dim);
    EXPECT_TRUE(check_jacobi(L).pass);
    EXPECT_EQ(nilpotency_class(L), c);
    // gamma_i has dimension sum_{n >= i} necklace(k, n)
    std::vector<int> lcs = lower_central_series(L);
    long rest = dim;
    for (int i = 1; i <= c; ++i) {
      EXPECT_EQ(lcs[static_cast<size_t>(i - 1)], rest);
      rest -= oracle::necklace_count(k, i);
    }
  }
}

TEST(Radical, Classification) {
  RadicalReport sl2 = radical_nilpotency_report(algebras::sl2());
  EXPECT_EQ(sl2.radical.dim(), 0);
  EXPECT_EQ(sl2.verdict, RadicalVerdict::Pass);

  RadicalReport heis = radical_nilpotency_report(algebras::heisenberg());
  EXPECT_EQ(heis.radical, Subspace::whole(3));
  EXPECT_EQ(heis.verdict, RadicalVerdict::Pass);

  RadicalReport sol = radical_nilpotency_report(algebras::solvable2());
  EXPECT_EQ(sol.radical.dim(), 2);
  EXPECT_FALSE(sol.radical_nilpotent);
  EXPECT_EQ(sol.verdict, RadicalVerdict::Flag);

  RadicalReport sum = radical_nilpotency_report(algebras::by_name("sl2+heisenberg"));
  EXPECT_EQ(sum.radical, Subspace::span(6, {unit(6, 3), unit(6, 4), unit(6, 5)}));
  EXPECT_EQ(sum.verdict, RadicalVerdict::Pass);

  // gl2 = sl2 + center
  RadicalReport gl2 = radical_nilpotency_report(algebras::by_name("sl2+abelian:1"));
  EXPECT_EQ(gl2.radical, Subspace::span(4, {unit(4, 3)}));
  EXPECT_EQ(gl2.verdict, RadicalVerdict::Pass);

  RadicalReport mixed = radical_nilpotency_report(algebras::by_name("solvable2+sl2"));
  EXPECT_EQ(mixed.radical, Subspace::span(5, {unit(5, 0), unit(5, 1)}));
  EXPECT_EQ(mixed.verdict, RadicalVerdict::Flag);
}

TEST(Radical, IsAnIdeal) {
  for (const char *name : {"sl2+heisenberg", "solvable2+sl2", "free_nilpotent:2:3+sl2"}) {
    StructureConstants L = algebras::by_name(name);
    Subspace R = solvable_radical(L);
    EXPECT_TRUE(R.contains(bracket_span(L, Subspace::whole(L.dimension()), R))) << name;
  }
}

TEST(ByName, RejectsUnknownNames) {
  EXPECT_THROW(algebras::by_name("so3"), std::invalid_argument);
  EXPECT_THROW(algebras::by_name("abelian:x"), std::invalid_argument);
}
