#pragma once

#include <climits>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace fglie {

/// Raised when a p-adic computation can no longer guarantee a single digit.
class PrecisionExhausted : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised when two operands live in different coefficient rings.
class RingMismatch : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class RingKind { Rational, PAdic, PAdicT };

/// Plain description of a coefficient ring.  PAdic models Z_p modulo p^N,
/// PAdicT models Z_p[[t]] truncated to (Z/p^N)[t]/t^M.
struct RingDescriptor {
  RingKind kind = RingKind::Rational;
  int prime = 0;
  int precision = 0;
  int t_precision = 0;

  friend bool operator==(const RingDescriptor &, const RingDescriptor &) = default;

  /// 4 when p = 2, p otherwise.  Only meaningful for p-adic kinds.
  int bold_p() const { return prime == 2 ? 4 : prime; }
  int bold_p_valuation() const { return prime == 2 ? 2 : 1; }
  std::string to_string() const;
};

namespace detail {
struct RingContext;
}

/// Interned handle to a coefficient ring.  Copies are cheap and two handles
/// compare equal exactly when their descriptors do.
class Ring {
public:
  Ring();

  static Ring rational();
  static Ring padic(int p, int precision);
  static Ring padic_t(int p, int precision, int t_precision);
  static Ring from_descriptor(const RingDescriptor &desc);

  const RingDescriptor &descriptor() const;
  RingKind kind() const { return descriptor().kind; }
  bool is_rational() const { return kind() == RingKind::Rational; }
  int prime() const { return descriptor().prime; }
  int precision() const { return descriptor().precision; }
  int t_precision() const { return descriptor().t_precision; }

  /// p^k for 0 <= k <= precision; computed on demand otherwise.
  mpz_class prime_power(int k) const;

  friend bool operator==(Ring a, Ring b) { return a.ctx_ == b.ctx_; }

private:
  explicit Ring(const detail::RingContext *ctx) : ctx_(ctx) {}
  const detail::RingContext *ctx_;
};

/// Sentinel absolute precision of an exact zero.
inline constexpr int kExactPrecision = INT_MAX / 4;

/// p-adic number p^shift * unit + O(p^precision).  A zero value stores
/// unit = 0 and shift = precision; the exact zero uses kExactPrecision.
struct PAdicValue {
  int shift = kExactPrecision;
  mpz_class unit = 0;
  int precision = kExactPrecision;

  bool is_zero() const { return unit == 0; }
  bool is_exact_zero() const { return unit == 0 && precision == kExactPrecision; }
  int relative_precision() const { return precision - shift; }
};

/// An element of one of the three coefficient rings.
class Coeff {
public:
  Coeff() = default; // rational zero

  static Coeff zero(Ring ring);
  static Coeff one(Ring ring);
  static Coeff from_int(Ring ring, long value);
  static Coeff from_integer(Ring ring, const mpz_class &value);
  /// Embeds a rational number.  For p-adic rings the denominator's p-part
  /// becomes a negative shift.
  static Coeff from_rational(Ring ring, const mpq_class &value);
  /// The indeterminate t of a PAdicT ring.
  static Coeff t(Ring ring);
  static Coeff parse(Ring ring, std::string_view text);

  Ring ring() const { return ring_; }

  bool is_zero() const;
  bool is_one() const;

  /// v_p(a) for p-adic kinds (minimum over t-coefficients for PAdicT);
  /// nullopt stands for +infinity, i.e. zero at working precision.
  std::optional<int> valuation() const;
  /// v_p for a Rational coefficient with an explicit prime.
  std::optional<int> valuation_at(int p) const;
  /// Guaranteed lower bound for the valuation; for zeros this is the
  /// absolute precision.
  int min_valuation() const;
  /// Lower bound for the m-adic order: v_p for PAdic, min_j (v_p(c_j) + j)
  /// for PAdicT, 0 for a nonzero Rational.
  int filtration_order() const;
  /// Value known modulo p^absolute_precision (kExactPrecision if exact).
  int absolute_precision() const;
  /// Member of the maximal ideal m: (p) for PAdic, (p, t) for PAdicT.
  bool in_maximal_ideal() const;

  Coeff &operator+=(const Coeff &other);
  Coeff &operator-=(const Coeff &other);
  Coeff &operator*=(const Coeff &other);
  /// this += a * b
  void add_product(const Coeff &a, const Coeff &b);

  friend Coeff operator+(Coeff a, const Coeff &b) { return a += b; }
  friend Coeff operator-(Coeff a, const Coeff &b) { return a -= b; }
  friend Coeff operator*(const Coeff &a, const Coeff &b);
  friend Coeff operator-(const Coeff &a);

  Coeff div_exact(const mpz_class &n) const;
  Coeff div_exact(long n) const { return div_exact(mpz_class(n)); }
  /// Multiplicative inverse; p-adic values may acquire a negative shift.
  Coeff inverse() const;
  Coeff scaled(const mpq_class &q) const;
  /// Caps the absolute precision (no-op for Rational).
  Coeff with_precision(int precision) const;

  /// True when a - b is known to vanish modulo p^k (exact equality for
  /// Rational).  False when either operand lacks k digits of precision.
  static bool agree_mod(const Coeff &a, const Coeff &b, int k);

  /// Semantic equality: exact for Rational, "difference is zero at working
  /// precision" for the p-adic kinds.
  friend bool operator==(const Coeff &a, const Coeff &b);

  const mpq_class &rational() const;
  const PAdicValue &padic() const;
  const std::vector<PAdicValue> &padic_t() const;

  /// Exact rational lift (symmetric residues for p-adic values).  PAdicT
  /// values lift only when all positive t-degree coefficients vanish.
  mpq_class lift() const;
  std::string to_string() const;

private:
  Ring ring_;
  std::variant<mpq_class, PAdicValue, std::vector<PAdicValue>> value_;

  void check_ring(const Coeff &other) const;
};

/// A coordinate vector (group point or Lie-algebra element).
using Point = std::vector<Coeff>;

Point zero_point(Ring ring, int d);
bool is_zero_point(const Point &x);
/// Coordinatewise semantic equality.
bool points_equal(const Point &a, const Point &b);
/// Coordinatewise agreement modulo p^k.
bool points_agree_mod(const Point &a, const Point &b, int k);
/// Minimum coordinate valuation lower bound (kExactPrecision for zero).
int point_min_valuation(const Point &x);
std::string point_to_string(const Point &x);

int padic_valuation(const mpz_class &n, int p);
int padic_valuation(const mpq_class &q, int p);

} // namespace fglie
