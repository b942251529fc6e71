#include <random>

#include <gtest/gtest.h>

#include "fglie/fgl.hpp"
#include "fglie/json_io.hpp"
#include "fglie/sampling.hpp"
#include "fglie/verify.hpp"
#include "oracles.hpp"

using namespace fglie;

namespace {

const Ring Q = Ring::rational();

Point pt(Ring ring, std::initializer_list<long> v) {
  Point x;
  for (long c : v)
    x.push_back(Coeff::from_int(ring, c));
  return x;
}

Point unit(Ring ring, int d, int i) {
  Point e = zero_point(ring, d);
  e[static_cast<size_t>(i)] = Coeff::one(ring);
  return e;
}

/// Superdiagonal coordinate order (1,2), (2,3), ..., (1,3), ... as 0-based
/// matrix positions.
std::vector<std::pair<int, int>> unitriangular_positions(int n) {
  std::vector<std::pair<int, int>> pos;
  for (int gap = 1; gap < n; ++gap)
    for (int i = 0; i + gap < n; ++i)
      pos.emplace_back(i, i + gap);
  return pos;
}

} // namespace

TEST(Laws, BuiltInsSatisfyAxioms) {
  for (const char *name : {"additive:3", "multiplicative", "heisenberg", "unitriangular:3", "unitriangular:4"}) {
    AxiomReport r = check_axioms(laws::by_name(name, Q, 6));
    EXPECT_TRUE(r.pass()) << name << ": " << r.failure;
  }
  EXPECT_TRUE(check_axioms(laws::heisenberg(Ring::padic(3, 6), 5)).pass());
}

TEST(Laws, BrokenAssociativityIsReported) {
  // F = x + y + x y^2 has identities but is not associative
  TruncSeries x = TruncSeries::variable(Q, 2, 4, 0), y = TruncSeries::variable(Q, 2, 4, 1);
  FormalGroupLaw F("broken", {x + y + x * y * y});
  AxiomReport r = check_axioms(F);
  EXPECT_TRUE(r.right_identity);
  EXPECT_TRUE(r.left_identity);
  EXPECT_FALSE(r.associativity);
  EXPECT_FALSE(r.failure.empty());
}

TEST(Laws, MultiplyAndInverse) {
  FormalGroupLaw H = laws::heisenberg(Q, 4);
  EXPECT_TRUE(points_equal(H.multiply(pt(Q, {3, 0, 0}), pt(Q, {0, 3, 0})), pt(Q, {3, 3, 9})));
  Rng rng(4);
  for (const char *name : {"heisenberg", "multiplicative", "unitriangular:3"}) {
    Ring P = Ring::padic(3, 10);
    FormalGroupLaw F = laws::by_name(name, P, 8);
    for (int i = 0; i < 5; ++i) {
      Point x = random_bold_p_point(P, 3, F.dimension(), rng);
      EXPECT_TRUE(points_agree_mod(F.multiply(x, F.inverse(x)), F.identity(), 10)) << name;
      EXPECT_TRUE(points_agree_mod(F.multiply(F.inverse(x), x), F.identity(), 10)) << name;
    }
  }
}

TEST(LieFromLaw, Heisenberg) {
  RingLieAlgebra L = lie_from_law(laws::heisenberg(Q, 3));
  EXPECT_EQ(L.rational_lift(), algebras::heisenberg());
}

TEST(LieFromLaw, UnitriangularIsMatrixCommutator) {
  const int n = 4;
  FormalGroupLaw F = laws::unitriangular(n, Q, 3);
  StructureConstants L = lie_from_law(F).rational_lift();
  auto pos = unitriangular_positions(n);
  const int d = static_cast<int>(pos.size());
  ASSERT_EQ(F.dimension(), d);
  auto E = [&](int a) {
    oracle::Mat m(n);
    m(pos[static_cast<size_t>(a)].first, pos[static_cast<size_t>(a)].second) = 1;
    return m;
  };
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      oracle::Mat c = oracle::bracket(E(a), E(b));
      for (int k = 0; k < d; ++k)
        EXPECT_EQ(L(a, b, k), c(pos[static_cast<size_t>(k)].first, pos[static_cast<size_t>(k)].second));
    }
}

TEST(LieFromLaw, RejectsPureQuadraticTerms) {
  TruncSeries x = TruncSeries::variable(Q, 2, 3, 0), y = TruncSeries::variable(Q, 2, 3, 1);
  FormalGroupLaw F("unnormalized", {x + y + x * x});
  EXPECT_THROW(lie_from_law(F), std::invalid_argument);
}

TEST(InvariantDerivations, BracketCorrespondence) {
  FormalGroupLaw H = laws::heisenberg(Q, 4);
  TruncOperator p1 = invariant_derivation(H, unit(Q, 3, 0), 3), p2 = invariant_derivation(H, unit(Q, 3, 1), 3),
                p3 = invariant_derivation(H, unit(Q, 3, 2), 3);
  EXPECT_EQ(commutator(p1, p2), p3);
  EXPECT_TRUE(commutator(p1, p3).is_zero());
  EXPECT_TRUE(points_equal(phi_of_derivation(p2), unit(Q, 3, 1)));
  // psi(e2) = d/dy2 + y1 d/dy3
  auto B = p2.basis();
  EXPECT_EQ(p2.entry(B->variable_index(1), B->variable_index(1)), Coeff::zero(Q));
  EXPECT_TRUE(p2.entry(0, B->variable_index(1)).is_one());
  EXPECT_TRUE(p2.entry(B->variable_index(0), B->variable_index(2)).is_one());
  // polynomial laws below the truncation degree may use A_{<=D}
  EXPECT_NO_THROW(invariant_derivation(laws::multiplicative(Q, 3), unit(Q, 1, 0), 3));
  TruncSeries x = TruncSeries::variable(Q, 2, 3, 0), y = TruncSeries::variable(Q, 2, 3, 1);
  FormalGroupLaw cubic("cubic", {x + y + x * x * y});
  EXPECT_THROW(invariant_derivation(cubic, unit(Q, 1, 0), 3), std::invalid_argument);
}

TEST(InvariantDerivations, CorrespondenceSuite) {
  for (const char *name : {"heisenberg", "unitriangular:3", "multiplicative", "additive:2"}) {
    SuiteReport r = correspondence_suite(laws::by_name(name, Q, 5), 4);
    EXPECT_TRUE(r.pass()) << name;
  }
}

TEST(GroupLog, HeisenbergClosedForm) {
  // log(x) = (x1, x2, x3 - x1 x2 / 2)
  FormalGroupLaw H = laws::heisenberg(Q, 4);
  Rng rng(12);
  for (int i = 0; i < 10; ++i) {
    Point x = random_bold_p_point(Q, 3, 3, rng);
    CorrespondenceResult r = group_log(H, x);
    EXPECT_TRUE(r.exact);
    Point expected = x;
    expected[2] -= (x[0] * x[1]).scaled(mpq_class(1, 2));
    EXPECT_TRUE(points_equal(r.coordinates, expected));
    EXPECT_TRUE(points_equal(group_exp(H, r.coordinates).coordinates, x));
  }
}

TEST(GroupLog, AdditiveIsIdentity) {
  FormalGroupLaw A = laws::additive(2, Q, 4);
  EXPECT_TRUE(points_equal(group_log(A, pt(Q, {6, -3})).coordinates, pt(Q, {6, -3})));
}

TEST(GroupLog, MultiplicativeMatchesLogSeries) {
  // log(1 + x) = sum (-1)^{n+1} x^n / n, summed as rationals and reduced
  Ring P = Ring::padic(3, 8);
  FormalGroupLaw M = laws::multiplicative(P, 6);
  for (long x : {3L, 6L, -9L, 12L}) {
    mpq_class sum = 0, power = 1;
    for (int n = 1; n <= 40; ++n) {
      power *= x;
      sum += mpq_class(n % 2 ? 1 : -1, n) * power;
    }
    Coeff expected = Coeff::from_rational(P, sum);
    Point got = group_log(M, pt(P, {x})).coordinates;
    EXPECT_TRUE(Coeff::agree_mod(got[0], expected, 8)) << x << ": " << got[0].to_string();
  }
}

TEST(GroupLog, MultiplicativeOverQIsTruncated) {
  FormalGroupLaw M = laws::multiplicative(Q, 6);
  CorrespondenceResult r = group_log(M, pt(Q, {3}));
  EXPECT_FALSE(r.exact);
  EXPECT_EQ(r.coordinates[0].to_string(), "-1713/20"); // 3 - 9/2 + 9 - 81/4 + 243/5 - 243/2
  CorrespondenceOptions strict;
  strict.truncate_rational = false;
  EXPECT_THROW(group_log(M, pt(Q, {3}), strict), NonTerminating);
}

TEST(GroupLog, RequiresBoldPPoints) {
  Ring P = Ring::padic(2, 8);
  FormalGroupLaw H = laws::heisenberg(P, 4);
  EXPECT_THROW(group_log(H, pt(P, {2, 0, 0})), std::invalid_argument);
  EXPECT_NO_THROW(group_log(H, pt(P, {4, 0, 0})));
}

TEST(Adjoint, SignConvention) {
  // tau_x psi(e2) = rho_x^{-1} psi(e2) rho_x = psi(e2) - 3 psi(e3) for x = (3, 0, 0)
  FormalGroupLaw H = laws::heisenberg(Q, 4);
  TruncOperator p2 = invariant_derivation(H, unit(Q, 3, 1), 3), p3 = invariant_derivation(H, unit(Q, 3, 2), 3);
  TruncOperator tau = adjoint_action(H, pt(Q, {3, 0, 0}), p2);
  EXPECT_EQ(tau, p2 - Coeff::from_int(Q, 3) * p3);
  RingLieAlgebra L = lie_from_law(H);
  EXPECT_TRUE(points_equal(adjoint_coordinates(L, pt(Q, {3, 0, 0}), unit(Q, 3, 1)), pt(Q, {0, 1, -3})));
}

TEST(Translations, LeftAndRightActions) {
  FormalGroupLaw U = laws::unitriangular(3, Q, 4);
  Rng rng(21);
  Point x = random_bold_p_point(Q, 3, 3, rng), y = random_bold_p_point(Q, 3, 3, rng);
  TruncOperator rx = translation(U, x, Side::Right, 3), ry = translation(U, y, Side::Right, 3);
  EXPECT_EQ(translation(U, U.multiply(x, y), Side::Right, 3), rx * ry);
  TruncOperator lx = translation(U, x, Side::Left, 3), ly = translation(U, y, Side::Left, 3);
  EXPECT_EQ(translation(U, U.multiply(x, y), Side::Left, 3), lx * ly);
  EXPECT_EQ(lx * ry, ry * lx);
}

TEST(Conjugation, IsUnipotentOnJetSpaces) {
  SuiteReport r = unipotent_suite(laws::unitriangular(4, Q, 5), 3, 3, 7, 4);
  EXPECT_TRUE(r.pass());
}

TEST(Suites, ExplogOverSeveralRings) {
  ExplogOptions opts;
  opts.trials = 3;
  opts.seed = 5;
  struct Case {
    const char *law;
    Ring ring;
    int prime;
  };
  for (const Case &c : {Case{"heisenberg", Q, 2}, Case{"unitriangular:3", Ring::padic(2, 8), 2},
                        Case{"multiplicative", Ring::padic(5, 6), 5}, Case{"heisenberg", Ring::padic_t(3, 5, 3), 3}}) {
    SuiteReport r = explog_suite(laws::by_name(c.law, c.ring, 5), c.prime, opts);
    for (const auto &check : r.checks)
      EXPECT_TRUE(check.pass()) << c.law << " " << c.ring.descriptor().to_string() << " " << check.name << ": "
                                << check.first_failure;
  }
}

TEST(Suites, AdjointPAdic) {
  SuiteReport r = adjoint_suite(laws::unitriangular(3, Ring::padic(3, 8), 5), 3, 3, 11);
  EXPECT_TRUE(r.pass());
}

TEST(LawJson, RoundTrip) {
  for (Ring ring : {Q, Ring::padic(3, 6), Ring::padic_t(2, 4, 2)}) {
    FormalGroupLaw F = laws::unitriangular(3, ring, 4);
    FormalGroupLaw G = law_from_json(parse_json(to_json(F).dump(), "law"));
    EXPECT_EQ(G.name(), F.name());
    EXPECT_EQ(G.ring(), F.ring());
    for (int k = 0; k < F.dimension(); ++k)
      EXPECT_EQ(G.component(k), F.component(k));
  }
}

TEST(LawJson, DiagnosticsNameTheField) {
  Json j = to_json(laws::heisenberg(Q, 3));
  j["components"][1]["terms"][0]["coefficient"] = "1/0";
  try {
    law_from_json(j);
    FAIL();
  } catch (const InputError &e) {
    EXPECT_EQ(e.field(), "components[1].terms[0].coefficient");
  }
  j = to_json(laws::heisenberg(Q, 3));
  j["ring"]["kind"] = "complex";
  EXPECT_THROW(law_from_json(j), InputError);
  j.erase("ring");
  try {
    law_from_json(j);
    FAIL();
  } catch (const InputError &e) {
    EXPECT_EQ(e.field(), "law.ring");
  }
}
