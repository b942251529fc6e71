#include <random>

#include <gtest/gtest.h>

#include "fglie/series.hpp"

using namespace fglie;

namespace {

const Ring Q = Ring::rational();

TruncSeries x(int n, int D, int i) { return TruncSeries::variable(Q, n, D, i); }
TruncSeries one(int n, int D) { return TruncSeries::constant(Q, n, D, Coeff::one(Q)); }
Coeff q(long a, long b = 1) { return Coeff::from_rational(Q, mpq_class(a, b)); }

TruncSeries random_series(int n, int D, std::mt19937_64 &rng, bool constant) {
  std::uniform_int_distribution<int> c(-3, 3);
  TruncSeries f(Q, n, D);
  std::vector<int> e(static_cast<size_t>(n), 0);
  // all monomials with exponents < 3 in each variable
  for (int code = 0;; ++code) {
    int rest = code;
    for (int i = 0; i < n; ++i) {
      e[static_cast<size_t>(i)] = rest % 3;
      rest /= 3;
    }
    if (rest)
      break;
    Monomial m(e);
    if (m.degree() == 0 && !constant)
      continue;
    f.add_term(m, q(c(rng)));
  }
  return f;
}

} // namespace

TEST(TruncSeries, TruncatesByTotalDegree) {
  TruncSeries f = one(1, 2) + x(1, 2, 0);
  TruncSeries cube = f * f * f;
  EXPECT_EQ(cube.size(), 3u);
  EXPECT_EQ(cube.coefficient(Monomial(std::vector<int>{2})), q(3));
  TruncSeries g = x(2, 3, 0) * x(2, 3, 1);
  EXPECT_EQ((g * g).size(), 0u); // degree 4 > 3
  EXPECT_EQ((g * x(2, 3, 0)).order(), 3);
}

TEST(TruncSeries, GeometricSeriesInverts) {
  const int D = 7;
  TruncSeries geo(Q, 1, D);
  for (int k = 0; k <= D; ++k)
    geo.add_term(Monomial(std::vector<int>{k}), q(1));
  EXPECT_EQ((one(1, D) - x(1, D, 0)) * geo, one(1, D));
}

TEST(TruncSeries, HomogeneousParts) {
  TruncSeries f = one(2, 4) + q(2) * x(2, 4, 0) + x(2, 4, 0) * x(2, 4, 1);
  EXPECT_EQ(f.homogeneous_part(2), x(2, 4, 0) * x(2, 4, 1));
  EXPECT_EQ(f.homogeneous_part(3).size(), 0u);
  EXPECT_EQ(f.truncated(1).degree_bound(), 1);
  EXPECT_EQ(f.truncated(1).size(), 2u);
  EXPECT_EQ((f - f.constant_term() * one(2, 4)).order(), 1);
}

TEST(Substitute, ExpOfLogIsIdentity) {
  const int D = 8;
  TruncSeries log1p(Q, 1, D), expm1(Q, 1, D);
  mpz_class fact = 1;
  for (int k = 1; k <= D; ++k) {
    fact *= k;
    log1p.add_term(Monomial(std::vector<int>{k}), q(k % 2 ? 1 : -1, k));
    expm1.add_term(Monomial(std::vector<int>{k}), Coeff::from_rational(Q, mpq_class(1, fact)));
  }
  std::vector<TruncSeries> inner{log1p};
  EXPECT_EQ(substitute(expm1, inner), x(1, D, 0));
  inner = {expm1};
  EXPECT_EQ(substitute(log1p, inner), x(1, D, 0));
}

TEST(Substitute, IsAssociative) {
  std::mt19937_64 rng(11);
  const int D = 6;
  for (int trial = 0; trial < 5; ++trial) {
    TruncSeries f = random_series(2, D, rng, true);
    std::vector<TruncSeries> g{random_series(2, D, rng, false), random_series(2, D, rng, false)};
    std::vector<TruncSeries> h{random_series(2, D, rng, false), random_series(2, D, rng, false)};
    std::vector<TruncSeries> gh{substitute(g[0], h), substitute(g[1], h)};
    EXPECT_EQ(substitute(substitute(f, g), h), substitute(f, gh));
  }
}

TEST(Substitute, RejectsConstantTerms) {
  std::vector<TruncSeries> args{one(1, 3) + x(1, 3, 0)};
  EXPECT_THROW(substitute(x(1, 3, 0), args), std::invalid_argument);
  // polynomials may be composed with shifted arguments: x^2 at 1 + x
  EXPECT_EQ(compose_polynomial(x(1, 3, 0) * x(1, 3, 0), args),
            one(1, 3) + q(2) * x(1, 3, 0) + x(1, 3, 0) * x(1, 3, 0));
}

TEST(Partial, HandExpansion) {
  TruncSeries f = x(2, 5, 0) * x(2, 5, 0) * x(2, 5, 1) + q(3) * x(2, 5, 1);
  EXPECT_EQ(partial(f, 0), q(2) * x(2, 5, 0) * x(2, 5, 1));
  EXPECT_EQ(partial(f, 1), x(2, 5, 0) * x(2, 5, 0) + q(3) * one(2, 5));
}

TEST(Partial, Leibniz) {
  std::mt19937_64 rng(5);
  const int D = 6;
  for (int trial = 0; trial < 10; ++trial) {
    TruncSeries f = random_series(2, D, rng, true), g = random_series(2, D, rng, true);
    for (int i = 0; i < 2; ++i)
      EXPECT_EQ(partial(f * g, i).truncated(D - 1), (partial(f, i) * g + f * partial(g, i)).truncated(D - 1));
  }
}

TEST(Evaluation, PointsAndSpecialization) {
  TruncSeries f = one(2, 3) + q(2) * x(2, 3, 0) + q(3) * x(2, 3, 0) * x(2, 3, 1);
  std::vector<Coeff> pt{q(1, 2), q(2)};
  EXPECT_EQ(eval_at_point(f, pt), q(5));
  // x + y + xy with y = 3 gives 3 + 4x
  TruncSeries law = x(2, 3, 0) + x(2, 3, 1) + x(2, 3, 0) * x(2, 3, 1);
  std::vector<Coeff> tail{q(3)};
  TruncSeries s = specialize_tail(law, 1, tail);
  EXPECT_EQ(s.nvars(), 1);
  EXPECT_EQ(s, TruncSeries::constant(Q, 1, 3, q(3)) + q(4) * x(1, 3, 0));
}

TEST(Evaluation, PAdicPointsMustBeTopologicallyNilpotent) {
  Ring P = Ring::padic(3, 6);
  TruncSeries f = TruncSeries::variable(P, 1, 3, 0);
  std::vector<Coeff> unit{Coeff::one(P)}, small{Coeff::from_int(P, 3)};
  EXPECT_THROW(eval_at_point(f, unit), std::domain_error);
  EXPECT_EQ(eval_at_point(f * f, small), Coeff::from_int(P, 9));
}

TEST(Embedding, ShiftsVariables) {
  TruncSeries f = x(1, 3, 0) * x(1, 3, 0);
  TruncSeries g = f.embedded(3, 2);
  EXPECT_EQ(g, x(3, 3, 2) * x(3, 3, 2));
}
