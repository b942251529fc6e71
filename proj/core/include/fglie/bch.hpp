#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fglie/coeff.hpp"
#include "fglie/freelie.hpp"
#include "fglie/liealg.hpp"

namespace fglie {

/// A d-dimensional Lie algebra with structure constants in a coefficient
/// ring (0-based indices, antisymmetry maintained on assignment).
class RingLieAlgebra {
public:
  RingLieAlgebra() = default;
  RingLieAlgebra(Ring ring, int dimension);
  static RingLieAlgebra from_rational(const StructureConstants &L, Ring ring);

  Ring ring() const { return ring_; }
  int dimension() const { return d_; }
  const Coeff &constant(int i, int j, int k) const { return c_[index(i, j, k)]; }
  void set_constant(int i, int j, int k, const Coeff &value);

  Point bracket(const Point &a, const Point &b) const;
  /// Exact rational structure constants (symmetric residues for p-adics).
  StructureConstants rational_lift() const;
  std::optional<int> nilpotency_class() const;

private:
  Ring ring_;
  int d_ = 0;
  std::vector<Coeff> c_;

  size_t index(int i, int j, int k) const { return static_cast<size_t>((i * d_ + j) * d_ + k); }
};

/// log(e^{x1} e^{x2}) truncated at degree N, in the Lyndon basis over
/// two generators.  Cached per N.
const LieSeries &bch_series(int N);

inline const std::vector<int> kAuditPrimes{2, 3, 5, 7};

/// -(n - 1) / (p - 1)
mpq_class valuation_bound(int degree, int p);

struct BchAuditEntry {
  Word word;
  int degree = 0;
  mpq_class coefficient;
  int valuation = 0;
  mpq_class bound;
  bool ok = true;
};

struct BchAudit {
  int prime = 0;
  bool pass = true;
  int violations = 0;
  std::vector<BchAuditEntry> entries;
};

BchAudit audit_valuations(const LieSeries &series, int p);

/// sum_{n<=N} H_n(a, b) in L.  Over Q the algebra must be nilpotent of
/// class <= N (the result is then exact).  Over p-adic rings a and b must
/// lie in bold_p L; non-nilpotent algebras get their precision capped by
/// the tail bound of the omitted degrees.
Point bch_eval(const RingLieAlgebra &L, const Point &a, const Point &b, int N);

/// Degree used by bch_eval when the caller has no preference: the
/// nilpotency class, or `fallback` for non-nilpotent algebras.
int default_bch_degree(const RingLieAlgebra &L, int fallback);

struct GammaCheckReport {
  int trials = 0;
  int identity_failures = 0;
  int inverse_failures = 0;
  int associativity_failures = 0;
  bool exact = true;
  /// Smallest k such that comparisons ran modulo p^k (0 over Q).
  int modulus_exponent = 0;
  std::string first_failure;
  bool pass() const { return identity_failures + inverse_failures + associativity_failures == 0; }
};

/// Identity, inverse and associativity of (bold_p L, H) on sampled points.
GammaCheckReport gamma_group_check(const RingLieAlgebra &L, int prime, int trials, std::uint64_t seed, int N);

} // namespace fglie
