#include "fglie/bch.hpp"

#include <map>
#include <mutex>

#include "fglie/operator.hpp"
#include "fglie/sampling.hpp"

namespace fglie {

RingLieAlgebra::RingLieAlgebra(Ring ring, int dimension)
    : ring_(ring), d_(dimension), c_(static_cast<size_t>(dimension * dimension * dimension), Coeff::zero(ring)) {
  if (dimension < 1)
    throw std::invalid_argument("Lie algebra dimension must be >= 1");
}

RingLieAlgebra RingLieAlgebra::from_rational(const StructureConstants &L, Ring ring) {
  RingLieAlgebra r(ring, L.dimension());
  for (int i = 0; i < r.d_; ++i)
    for (int j = 0; j < r.d_; ++j)
      for (int k = 0; k < r.d_; ++k)
        if (L(i, j, k) != 0)
          r.c_[r.index(i, j, k)] = Coeff::from_rational(ring, L(i, j, k));
  return r;
}

void RingLieAlgebra::set_constant(int i, int j, int k, const Coeff &value) {
  if (i == j) {
    if (!value.is_zero())
      throw std::invalid_argument("[e_i, e_i] must vanish");
    return;
  }
  c_[index(i, j, k)] = value;
  c_[index(j, i, k)] = -value;
}

Point RingLieAlgebra::bracket(const Point &a, const Point &b) const {
  if (static_cast<int>(a.size()) != d_ || static_cast<int>(b.size()) != d_)
    throw std::invalid_argument("bracket: vector length mismatch");
  Point r = zero_point(ring_, d_);
  for (int i = 0; i < d_; ++i) {
    if (a[static_cast<size_t>(i)].is_zero())
      continue;
    for (int j = 0; j < d_; ++j) {
      if (i == j || b[static_cast<size_t>(j)].is_zero())
        continue;
      Coeff f = a[static_cast<size_t>(i)] * b[static_cast<size_t>(j)];
      for (int k = 0; k < d_; ++k) {
        const Coeff &c = c_[index(i, j, k)];
        if (!c.is_zero())
          r[static_cast<size_t>(k)].add_product(f, c);
      }
    }
  }
  return r;
}

StructureConstants RingLieAlgebra::rational_lift() const {
  StructureConstants L(d_);
  for (int i = 0; i < d_; ++i)
    for (int j = i + 1; j < d_; ++j) {
      QVector r(static_cast<size_t>(d_));
      for (int k = 0; k < d_; ++k)
        r[static_cast<size_t>(k)] = c_[index(i, j, k)].lift();
      L.set_bracket(i, j, r);
    }
  return L;
}

std::optional<int> RingLieAlgebra::nilpotency_class() const { return fglie::nilpotency_class(rational_lift()); }

// ---------------------------------------------------------------------------

const LieSeries &bch_series(int N) {
  if (N < 1)
    throw std::invalid_argument("BCH degree bound must be >= 1");
  static std::mutex mutex;
  static std::map<int, LieSeries> cache;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(N);
    if (it != cache.end())
      return it->second;
  }
  // exp(x1) exp(x2) = sum x1^a x2^b / (a! b!)
  AssocSeries product(2, N);
  mpz_class fa = 1;
  for (int a = 0; a <= N; ++a) {
    if (a > 0)
      fa *= a;
    mpz_class fb = 1;
    for (int b = 0; a + b <= N; ++b) {
      if (b > 0)
        fb *= b;
      product.add_term(Word(static_cast<size_t>(a), '1') + Word(static_cast<size_t>(b), '2'), mpq_class(1, 1) / mpq_class(fa * fb));
    }
  }
  AssocSeries u = product - AssocSeries::one(2, N);
  LieSeries h;
  try {
    h = project_to_lie(log_one_plus(u));
  } catch (const NotPrimitive &e) {
    throw std::logic_error(std::string("BCH projection left a non-Lie remainder: ") + e.what());
  }
  std::lock_guard lock(mutex);
  return cache.emplace(N, std::move(h)).first->second;
}

mpq_class valuation_bound(int degree, int p) {
  mpq_class b(-(degree - 1), p - 1);
  b.canonicalize();
  return b;
}

BchAudit audit_valuations(const LieSeries &series, int p) {
  BchAudit audit;
  audit.prime = p;
  for (const auto &[w, c] : series.terms()) {
    BchAuditEntry e;
    e.word = w;
    e.degree = static_cast<int>(w.size());
    e.coefficient = c;
    e.valuation = padic_valuation(c, p);
    e.bound = valuation_bound(e.degree, p);
    // v >= -(n-1)/(p-1)  <=>  v (p-1) >= -(n-1)
    e.ok = static_cast<long>(e.valuation) * (p - 1) >= -(e.degree - 1);
    if (!e.ok) {
      audit.pass = false;
      ++audit.violations;
    }
    audit.entries.push_back(std::move(e));
  }
  return audit;
}

int default_bch_degree(const RingLieAlgebra &L, int fallback) {
  auto c = L.nilpotency_class();
  return c ? std::max(*c, 1) : fallback;
}

Point bch_eval(const RingLieAlgebra &L, const Point &a, const Point &b, int N) {
  const Ring ring = L.ring();
  const int d = L.dimension();
  if (static_cast<int>(a.size()) != d || static_cast<int>(b.size()) != d)
    throw std::invalid_argument("bch_eval: coordinate vectors must have the algebra's dimension");
  if (N < 1)
    throw std::invalid_argument("bch_eval: degree bound must be >= 1");
  const std::optional<int> cls = L.nilpotency_class();
  int degree = N;
  bool exact = false;
  if (cls && *cls <= N) {
    degree = std::max(*cls, 1);
    exact = true;
  }
  if (ring.is_rational() && !exact)
    throw NonTerminating(cls ? "bch_eval over Q: nilpotency class " + std::to_string(*cls) +
                                   " exceeds degree bound " + std::to_string(N)
                             : std::string("bch_eval over Q needs a nilpotent algebra"));
  int m = kExactPrecision;
  if (!ring.is_rational()) {
    const int need = ring.descriptor().bold_p_valuation();
    m = std::min(point_min_valuation(a), point_min_valuation(b));
    if (m < need)
      throw std::invalid_argument("bch_eval: arguments must lie in bold_p L (valuation >= " + std::to_string(need) + ")");
  }
  const Point gens[2] = {a, b};
  Point zero = zero_point(ring, d);
  Point r = evaluate_lie_series<Point>(
      bch_series(degree), std::span<const Point>(gens, 2), zero,
      [&L](const Point &x, const Point &y) { return L.bracket(x, y); },
      [](const Point &x, const mpq_class &q) {
        Point s;
        s.reserve(x.size());
        for (const auto &c : x)
          s.push_back(c.scaled(q));
        return s;
      },
      [](Point x, const Point &y) {
        for (size_t i = 0; i < x.size(); ++i)
          x[i] += y[i];
        return x;
      },
      [](const Point &x) { return is_zero_point(x); });
  if (!ring.is_rational()) {
    int cap = ring.precision();
    if (!exact && m < kExactPrecision) {
      const int p = ring.prime();
      long tail = static_cast<long>(N + 1) * m - N / (p - 1);
      cap = static_cast<int>(std::min<long>(cap, tail));
    }
    for (auto &c : r)
      c = c.with_precision(cap);
  }
  return r;
}

GammaCheckReport gamma_group_check(const RingLieAlgebra &L, int prime, int trials, std::uint64_t seed, int N) {
  const Ring ring = L.ring();
  const int d = L.dimension();
  Rng rng(seed);
  GammaCheckReport report;
  report.trials = trials;
  report.exact = ring.is_rational();
  report.modulus_exponent = ring.is_rational() ? 0 : ring.precision();
  // Truncated BCH values are only certified to their capped precision, so
  // each comparison runs modulo the smaller of the two.
  auto certified = [](const Point &x) {
    int k = kExactPrecision;
    for (const auto &c : x)
      k = std::min(k, c.absolute_precision());
    return k;
  };
  auto same = [&](const Point &x, const Point &y) {
    if (ring.is_rational())
      return points_equal(x, y);
    const int k = std::min({ring.precision(), certified(x), certified(y)});
    report.modulus_exponent = std::min(report.modulus_exponent, k);
    return points_agree_mod(x, y, k);
  };
  auto note = [&](const std::string &what, int t) {
    if (report.first_failure.empty())
      report.first_failure = what + " failed in trial " + std::to_string(t);
  };
  const Point e = zero_point(ring, d);
  for (int t = 0; t < trials; ++t) {
    Point a = random_bold_p_point(ring, prime, d, rng);
    Point b = random_bold_p_point(ring, prime, d, rng);
    Point c = random_bold_p_point(ring, prime, d, rng);
    if (!same(bch_eval(L, a, e, N), a) || !same(bch_eval(L, e, a, N), a)) {
      ++report.identity_failures;
      note("identity", t);
    }
    Point neg;
    for (const auto &x : a)
      neg.push_back(-x);
    if (!same(bch_eval(L, a, neg, N), e)) {
      ++report.inverse_failures;
      note("inverse", t);
    }
    Point left = bch_eval(L, bch_eval(L, a, b, N), c, N);
    Point right = bch_eval(L, a, bch_eval(L, b, c, N), N);
    if (!same(left, right)) {
      ++report.associativity_failures;
      note("associativity", t);
    }
  }
  return report;
}

} // namespace fglie
