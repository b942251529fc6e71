#include "fglie/coeff.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <regex>
#include <sstream>
#include <tuple>

namespace fglie {

namespace detail {

struct RingContext {
  RingDescriptor desc;
  std::vector<mpz_class> powers; // p^0 .. p^N
};

} // namespace detail

namespace {

bool is_prime(int n) {
  if (n < 2)
    return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

const detail::RingContext *intern(const RingDescriptor &desc) {
  static std::mutex mutex;
  static std::map<std::tuple<int, int, int, int>, std::unique_ptr<detail::RingContext>> table;
  std::lock_guard lock(mutex);
  auto key = std::make_tuple(static_cast<int>(desc.kind), desc.prime, desc.precision, desc.t_precision);
  auto &slot = table[key];
  if (!slot) {
    slot = std::make_unique<detail::RingContext>();
    slot->desc = desc;
    if (desc.kind != RingKind::Rational) {
      slot->powers.reserve(desc.precision + 1);
      mpz_class pk = 1;
      for (int k = 0; k <= desc.precision; ++k) {
        slot->powers.push_back(pk);
        pk *= desc.prime;
      }
    }
  }
  return slot.get();
}

mpz_class pow_p(int p, int k) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(k));
  return r;
}

mpz_class mod_nonneg(const mpz_class &a, const mpz_class &m) {
  mpz_class r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

// Strips the p-part of a nonzero integer in place and returns its exponent.
int strip_p(mpz_class &n, int p) {
  int k = 0;
  while (mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(p))) {
    mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(p));
    ++k;
  }
  return k;
}

// Arithmetic on PAdicValue for a fixed (p, N).
struct PAdicOps {
  int p;
  int n;
  const Ring &ring;

  mpz_class power(int k) const { return ring.prime_power(k); }

  static PAdicValue zero(int precision) {
    PAdicValue v;
    v.shift = precision;
    v.unit = 0;
    v.precision = precision;
    return v;
  }

  // Builds p^s0 * value + O(p^precision) in canonical form.
  PAdicValue make(int s0, mpz_class value, int precision) const {
    if (value == 0)
      return zero(precision);
    if (precision == kExactPrecision) {
      int j = strip_p(value, p);
      PAdicValue v;
      v.shift = s0 + j;
      v.unit = mod_nonneg(value, power(n));
      v.precision = v.shift + n;
      return v;
    }
    int rel = precision - s0;
    if (rel <= 0)
      return zero(precision);
    value = mod_nonneg(value, power(rel));
    if (value == 0)
      return zero(precision);
    int j = strip_p(value, p);
    rel -= j;
    if (rel > n) {
      rel = n;
      value = mod_nonneg(value, power(n));
    }
    PAdicValue v;
    v.shift = s0 + j;
    v.unit = std::move(value);
    v.precision = v.shift + rel;
    return v;
  }

  PAdicValue from_rational(const mpq_class &q) const {
    if (q == 0)
      return PAdicValue{};
    mpz_class num = q.get_num();
    mpz_class den = q.get_den();
    int vn = strip_p(num, p);
    int vd = strip_p(den, p);
    mpz_class modulus = power(n);
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), modulus.get_mpz_t());
    PAdicValue v;
    v.shift = vn - vd;
    v.unit = mod_nonneg(num * inv, modulus);
    v.precision = v.shift + n;
    return v;
  }

  PAdicValue add(const PAdicValue &a, const PAdicValue &b) const {
    if (a.is_exact_zero())
      return b;
    if (b.is_exact_zero())
      return a;
    int precision = std::min(a.precision, b.precision);
    int s0 = std::min(a.shift, b.shift);
    if (s0 >= precision)
      return zero(precision);
    mpz_class value = 0;
    if (!a.is_zero() && a.shift < precision)
      value += a.unit * power(a.shift - s0);
    if (!b.is_zero() && b.shift < precision)
      value += b.unit * power(b.shift - s0);
    return make(s0, std::move(value), precision);
  }

  PAdicValue neg(const PAdicValue &a) const {
    if (a.is_zero())
      return a;
    PAdicValue r = a;
    r.unit = power(a.relative_precision()) - a.unit;
    return r;
  }

  PAdicValue mul(const PAdicValue &a, const PAdicValue &b) const {
    if (a.is_exact_zero() || b.is_exact_zero())
      return PAdicValue{};
    if (a.is_zero() && b.is_zero())
      return zero(a.precision + b.precision);
    if (a.is_zero())
      return zero(a.precision + b.shift);
    if (b.is_zero())
      return zero(b.precision + a.shift);
    int rel = std::min(a.relative_precision(), b.relative_precision());
    PAdicValue r;
    r.shift = a.shift + b.shift;
    r.unit = mod_nonneg(a.unit * b.unit, power(rel));
    r.precision = r.shift + rel;
    return r;
  }

  PAdicValue div_exact(const PAdicValue &a, mpz_class divisor) const {
    int k = strip_p(divisor, p);
    if (a.is_exact_zero())
      return a;
    PAdicValue r;
    if (a.is_zero()) {
      r = zero(a.precision - k);
    } else {
      int rel = a.relative_precision();
      mpz_class modulus = power(rel);
      mpz_class inv;
      mpz_invert(inv.get_mpz_t(), divisor.get_mpz_t(), modulus.get_mpz_t());
      r.shift = a.shift - k;
      r.unit = mod_nonneg(a.unit * inv, modulus);
      r.precision = r.shift + rel;
    }
    if (r.precision < 1)
      throw PrecisionExhausted("division by " + divisor.get_str() + "*" + std::to_string(p) + "^" +
                               std::to_string(k) + " leaves no guaranteed p-adic digit");
    return r;
  }

  PAdicValue inverse(const PAdicValue &a) const {
    if (a.is_zero())
      throw std::domain_error("inverse of a p-adic zero");
    int rel = a.relative_precision();
    mpz_class modulus = power(rel);
    PAdicValue r;
    r.shift = -a.shift;
    mpz_invert(r.unit.get_mpz_t(), a.unit.get_mpz_t(), modulus.get_mpz_t());
    r.precision = r.shift + rel;
    return r;
  }

  PAdicValue cap(const PAdicValue &a, int precision) const {
    if (precision >= a.precision)
      return a;
    if (a.is_zero() || a.shift >= precision)
      return zero(precision);
    PAdicValue r;
    r.shift = a.shift;
    r.unit = mod_nonneg(a.unit, power(precision - a.shift));
    r.precision = precision;
    return r;
  }

  mpq_class lift(const PAdicValue &a) const {
    if (a.is_zero())
      return 0;
    mpz_class modulus = power(a.relative_precision());
    mpz_class u = a.unit;
    if (2 * u > modulus)
      u -= modulus;
    mpq_class r(u);
    if (a.shift >= 0)
      r *= mpq_class(pow_p(p, a.shift));
    else
      r /= mpq_class(pow_p(p, -a.shift));
    r.canonicalize();
    return r;
  }

  std::string to_string(const PAdicValue &a) const {
    if (a.is_exact_zero())
      return "0";
    std::string mod = " mod " + std::to_string(p) + "^" + std::to_string(a.precision);
    if (a.is_zero())
      return "0" + mod;
    return a.unit.get_str() + "*" + std::to_string(p) + "^" + std::to_string(a.shift) + mod;
  }

  PAdicValue parse(std::string_view text) const {
    static const std::regex full(R"(^\s*(-?\d+)\s*\*\s*(\d+)\s*\^\s*(-?\d+)\s*(?:mod\s*(\d+)\s*\^\s*(-?\d+))?\s*$)");
    static const std::regex zero_mod(R"(^\s*0\s*mod\s*(\d+)\s*\^\s*(-?\d+)\s*$)");
    static const std::regex plain(R"(^\s*(-?\d+)(?:\s*/\s*(\d+))?\s*$)");
    std::string s(text);
    std::smatch m;
    if (std::regex_match(s, m, full)) {
      if (std::stoi(m[2].str()) != p)
        throw std::invalid_argument("coefficient '" + s + "' uses prime " + m[2].str() + " in a " +
                                    std::to_string(p) + "-adic ring");
      int shift = std::stoi(m[3].str());
      int precision = m[4].matched ? std::stoi(m[5].str()) : kExactPrecision;
      return make(shift, mpz_class(m[1].str()), precision);
    }
    if (std::regex_match(s, m, zero_mod)) {
      if (std::stoi(m[1].str()) != p)
        throw std::invalid_argument("coefficient '" + s + "' uses the wrong prime");
      return zero(std::stoi(m[2].str()));
    }
    if (std::regex_match(s, m, plain)) {
      mpq_class q(mpz_class(m[1].str()), m[2].matched ? mpz_class(m[2].str()) : mpz_class(1));
      if (q.get_den() == 0)
        throw std::invalid_argument("zero denominator in '" + s + "'");
      q.canonicalize();
      return from_rational(q);
    }
    throw std::invalid_argument("malformed p-adic coefficient '" + s + "'");
  }
};

PAdicOps ops_for(const Ring &ring) { return PAdicOps{ring.prime(), ring.precision(), ring}; }

using Poly = std::vector<PAdicValue>;

Poly poly_add(const PAdicOps &ops, const Poly &a, const Poly &b) {
  Poly r(a.size());
  for (size_t i = 0; i < a.size(); ++i)
    r[i] = ops.add(a[i], b[i]);
  return r;
}

Poly poly_mul(const PAdicOps &ops, const Poly &a, const Poly &b) {
  Poly r(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_exact_zero())
      continue;
    for (size_t j = 0; i + j < a.size(); ++j) {
      if (b[j].is_exact_zero())
        continue;
      r[i + j] = ops.add(r[i + j], ops.mul(a[i], b[j]));
    }
  }
  return r;
}

/// Splits "a + b - c" at top-level binary signs.  A '-' directly after '^'
/// or '*' (or at the start of a term) belongs to the term itself.
std::vector<std::pair<bool, std::string>> split_signed_terms(std::string_view text) {
  std::vector<std::pair<bool, std::string>> parts;
  std::string current;
  bool negative = false;
  int depth = 0;
  auto last_nonspace = [&]() {
    size_t e = current.find_last_not_of(" \t\n");
    return e == std::string::npos ? '\0' : current[e];
  };
  for (char c : text) {
    if (c == '(')
      ++depth;
    if (c == ')')
      --depth;
    const char prev = last_nonspace();
    const bool binary_minus = c == '-' && depth == 0 && prev != '\0' && prev != '^' && prev != '*';
    if ((c == '+' && depth == 0) || binary_minus) {
      parts.emplace_back(negative, current);
      current.clear();
      negative = binary_minus;
    } else {
      current.push_back(c);
    }
  }
  parts.emplace_back(negative, current);
  return parts;
}

std::string trim(std::string_view s) {
  size_t b = s.find_first_not_of(" \t\n");
  if (b == std::string_view::npos)
    return {};
  size_t e = s.find_last_not_of(" \t\n");
  return std::string(s.substr(b, e - b + 1));
}

} // namespace

std::string RingDescriptor::to_string() const {
  switch (kind) {
  case RingKind::Rational:
    return "Q";
  case RingKind::PAdic:
    return "Z_" + std::to_string(prime) + " mod " + std::to_string(prime) + "^" + std::to_string(precision);
  case RingKind::PAdicT:
    return "Z_" + std::to_string(prime) + "[[t]] mod (" + std::to_string(prime) + "^" + std::to_string(precision) +
           ", t^" + std::to_string(t_precision) + ")";
  }
  return "?";
}

Ring::Ring() : ctx_(intern(RingDescriptor{})) {}

Ring Ring::rational() { return Ring(intern(RingDescriptor{})); }

Ring Ring::padic(int p, int precision) {
  return from_descriptor(RingDescriptor{RingKind::PAdic, p, precision, 0});
}

Ring Ring::padic_t(int p, int precision, int t_precision) {
  return from_descriptor(RingDescriptor{RingKind::PAdicT, p, precision, t_precision});
}

Ring Ring::from_descriptor(const RingDescriptor &desc) {
  RingDescriptor d = desc;
  if (d.kind == RingKind::Rational)
    return rational();
  if (!is_prime(d.prime))
    throw std::invalid_argument("ring prime must be prime, got " + std::to_string(d.prime));
  if (d.precision < 1)
    throw std::invalid_argument("ring precision must be >= 1");
  if (d.kind == RingKind::PAdicT) {
    if (d.t_precision < 1)
      throw std::invalid_argument("ring t_precision must be >= 1");
  } else {
    d.t_precision = 0;
  }
  return Ring(intern(d));
}

const RingDescriptor &Ring::descriptor() const { return ctx_->desc; }

mpz_class Ring::prime_power(int k) const {
  if (k >= 0 && static_cast<size_t>(k) < ctx_->powers.size())
    return ctx_->powers[static_cast<size_t>(k)];
  return pow_p(ctx_->desc.prime, k);
}

int padic_valuation(const mpz_class &n, int p) {
  if (n == 0)
    return kExactPrecision;
  mpz_class m = n;
  return strip_p(m, p);
}

int padic_valuation(const mpq_class &q, int p) {
  if (q == 0)
    return kExactPrecision;
  return padic_valuation(q.get_num(), p) - padic_valuation(q.get_den(), p);
}

// ---------------------------------------------------------------------------

Coeff Coeff::zero(Ring ring) {
  Coeff c;
  c.ring_ = ring;
  switch (ring.kind()) {
  case RingKind::Rational:
    c.value_ = mpq_class(0);
    break;
  case RingKind::PAdic:
    c.value_ = PAdicValue{};
    break;
  case RingKind::PAdicT:
    c.value_ = Poly(static_cast<size_t>(ring.t_precision()));
    break;
  }
  return c;
}

Coeff Coeff::one(Ring ring) { return from_int(ring, 1); }

Coeff Coeff::from_int(Ring ring, long value) { return from_rational(ring, mpq_class(value)); }

Coeff Coeff::from_integer(Ring ring, const mpz_class &value) { return from_rational(ring, mpq_class(value)); }

Coeff Coeff::from_rational(Ring ring, const mpq_class &value) {
  Coeff c = zero(ring);
  switch (ring.kind()) {
  case RingKind::Rational:
    c.value_ = value;
    break;
  case RingKind::PAdic:
    c.value_ = ops_for(ring).from_rational(value);
    break;
  case RingKind::PAdicT:
    std::get<Poly>(c.value_)[0] = ops_for(ring).from_rational(value);
    break;
  }
  return c;
}

Coeff Coeff::t(Ring ring) {
  if (ring.kind() != RingKind::PAdicT)
    throw std::invalid_argument("t exists only in a PAdicT ring");
  Coeff c = zero(ring);
  if (ring.t_precision() > 1)
    std::get<Poly>(c.value_)[1] = ops_for(ring).from_rational(1);
  return c;
}

Coeff Coeff::parse(Ring ring, std::string_view text) {
  std::string s = trim(text);
  if (s.empty())
    throw std::invalid_argument("empty coefficient string");
  switch (ring.kind()) {
  case RingKind::Rational: {
    static const std::regex plain(R"(^(-?\d+)(?:\s*/\s*(\d+))?$)");
    std::smatch m;
    if (!std::regex_match(s, m, plain))
      throw std::invalid_argument("malformed rational coefficient '" + s + "'");
    mpz_class den = m[2].matched ? mpz_class(m[2].str()) : mpz_class(1);
    if (den == 0)
      throw std::invalid_argument("zero denominator in '" + s + "'");
    mpq_class q(mpz_class(m[1].str()), den);
    q.canonicalize();
    return from_rational(ring, q);
  }
  case RingKind::PAdic: {
    Coeff c = zero(ring);
    c.value_ = ops_for(ring).parse(s);
    return c;
  }
  case RingKind::PAdicT: {
    PAdicOps ops = ops_for(ring);
    Coeff c = zero(ring);
    auto &poly = std::get<Poly>(c.value_);
    for (const auto &[negative, raw] : split_signed_terms(s)) {
      std::string part = trim(raw);
      if (part.empty())
        throw std::invalid_argument("malformed t-polynomial '" + s + "'");
      PAdicValue coefficient;
      std::string rest;
      if (part.front() == '(') {
        size_t close = part.find(')');
        if (close == std::string::npos)
          throw std::invalid_argument("unbalanced parenthesis in '" + part + "'");
        coefficient = ops.parse(part.substr(1, close - 1));
        rest = trim(part.substr(close + 1));
      } else if (const std::string body = part.front() == '-' ? trim(part.substr(1)) : part;
                 !body.empty() && body.front() == 't') {
        coefficient = ops.from_rational(part.front() == '-' ? -1 : 1);
        rest = body;
      } else {
        size_t star = part.find('*');
        coefficient = ops.parse(part.substr(0, star));
        rest = star == std::string::npos ? std::string() : trim(part.substr(star));
      }
      int degree = 0;
      if (!rest.empty()) {
        static const std::regex power(R"(^(?:\*\s*)?t(?:\s*\^\s*(\d+))?$)");
        std::smatch m;
        if (!std::regex_match(rest, m, power))
          throw std::invalid_argument("malformed t-polynomial term '" + part + "'");
        degree = m[1].matched ? std::stoi(m[1].str()) : 1;
      }
      if (negative)
        coefficient = ops.neg(coefficient);
      if (degree < ring.t_precision())
        poly[static_cast<size_t>(degree)] = ops.add(poly[static_cast<size_t>(degree)], coefficient);
    }
    return c;
  }
  }
  return zero(ring);
}

void Coeff::check_ring(const Coeff &other) const {
  if (!(ring_ == other.ring_))
    throw RingMismatch("coefficient ring mismatch: " + ring_.descriptor().to_string() + " vs " +
                       other.ring_.descriptor().to_string());
}

bool Coeff::is_zero() const {
  switch (ring_.kind()) {
  case RingKind::Rational:
    return std::get<mpq_class>(value_) == 0;
  case RingKind::PAdic:
    return std::get<PAdicValue>(value_).is_zero();
  case RingKind::PAdicT:
    for (const auto &c : std::get<Poly>(value_))
      if (!c.is_zero())
        return false;
    return true;
  }
  return false;
}

bool Coeff::is_one() const { return (*this - one(ring_)).is_zero(); }

std::optional<int> Coeff::valuation() const {
  switch (ring_.kind()) {
  case RingKind::Rational:
    throw std::invalid_argument("valuation of a Rational coefficient needs an explicit prime");
  case RingKind::PAdic: {
    const auto &v = std::get<PAdicValue>(value_);
    if (v.is_zero())
      return std::nullopt;
    return v.shift;
  }
  case RingKind::PAdicT: {
    std::optional<int> best;
    for (const auto &c : std::get<Poly>(value_))
      if (!c.is_zero())
        best = best ? std::min(*best, c.shift) : c.shift;
    return best;
  }
  }
  return std::nullopt;
}

std::optional<int> Coeff::valuation_at(int p) const {
  if (ring_.kind() != RingKind::Rational) {
    if (p != ring_.prime())
      throw std::invalid_argument("valuation requested at a prime different from the ring's");
    return valuation();
  }
  const auto &q = std::get<mpq_class>(value_);
  if (q == 0)
    return std::nullopt;
  return padic_valuation(q, p);
}

int Coeff::min_valuation() const {
  switch (ring_.kind()) {
  case RingKind::Rational:
    return is_zero() ? kExactPrecision : 0;
  case RingKind::PAdic:
    return std::get<PAdicValue>(value_).shift;
  case RingKind::PAdicT: {
    int best = kExactPrecision;
    for (const auto &c : std::get<Poly>(value_))
      best = std::min(best, c.shift);
    return best;
  }
  }
  return 0;
}

int Coeff::filtration_order() const {
  if (ring_.kind() != RingKind::PAdicT)
    return min_valuation();
  int best = kExactPrecision;
  const auto &poly = std::get<Poly>(value_);
  for (size_t j = 0; j < poly.size(); ++j)
    best = std::min(best, poly[j].shift + static_cast<int>(j));
  return best;
}

int Coeff::absolute_precision() const {
  switch (ring_.kind()) {
  case RingKind::Rational:
    return kExactPrecision;
  case RingKind::PAdic:
    return std::get<PAdicValue>(value_).precision;
  case RingKind::PAdicT: {
    int best = kExactPrecision;
    for (const auto &c : std::get<Poly>(value_))
      best = std::min(best, c.precision);
    return best;
  }
  }
  return kExactPrecision;
}

bool Coeff::in_maximal_ideal() const {
  switch (ring_.kind()) {
  case RingKind::Rational:
    return true;
  case RingKind::PAdic:
    return std::get<PAdicValue>(value_).shift >= 1;
  case RingKind::PAdicT:
    return std::get<Poly>(value_)[0].shift >= 1;
  }
  return false;
}

Coeff &Coeff::operator+=(const Coeff &other) {
  check_ring(other);
  switch (ring_.kind()) {
  case RingKind::Rational:
    std::get<mpq_class>(value_) += std::get<mpq_class>(other.value_);
    break;
  case RingKind::PAdic:
    value_ = ops_for(ring_).add(std::get<PAdicValue>(value_), std::get<PAdicValue>(other.value_));
    break;
  case RingKind::PAdicT:
    value_ = poly_add(ops_for(ring_), std::get<Poly>(value_), std::get<Poly>(other.value_));
    break;
  }
  return *this;
}

Coeff &Coeff::operator-=(const Coeff &other) {
  if (ring_.kind() == RingKind::Rational) {
    check_ring(other);
    std::get<mpq_class>(value_) -= std::get<mpq_class>(other.value_);
    return *this;
  }
  return *this += -other;
}

Coeff operator*(const Coeff &a, const Coeff &b) {
  a.check_ring(b);
  Coeff r;
  r.ring_ = a.ring_;
  switch (a.ring_.kind()) {
  case RingKind::Rational:
    r.value_ = mpq_class(std::get<mpq_class>(a.value_) * std::get<mpq_class>(b.value_));
    break;
  case RingKind::PAdic:
    r.value_ = ops_for(a.ring_).mul(std::get<PAdicValue>(a.value_), std::get<PAdicValue>(b.value_));
    break;
  case RingKind::PAdicT:
    r.value_ = poly_mul(ops_for(a.ring_), std::get<Poly>(a.value_), std::get<Poly>(b.value_));
    break;
  }
  return r;
}

Coeff &Coeff::operator*=(const Coeff &other) {
  if (ring_.kind() == RingKind::Rational) {
    check_ring(other);
    std::get<mpq_class>(value_) *= std::get<mpq_class>(other.value_);
    return *this;
  }
  *this = *this * other;
  return *this;
}

void Coeff::add_product(const Coeff &a, const Coeff &b) {
  if (ring_.kind() == RingKind::Rational) {
    check_ring(a);
    check_ring(b);
    thread_local mpq_class tmp;
    mpq_mul(tmp.get_mpq_t(), std::get<mpq_class>(a.value_).get_mpq_t(), std::get<mpq_class>(b.value_).get_mpq_t());
    auto &q = std::get<mpq_class>(value_);
    mpq_add(q.get_mpq_t(), q.get_mpq_t(), tmp.get_mpq_t());
    return;
  }
  *this += a * b;
}

Coeff operator-(const Coeff &a) {
  Coeff r = a;
  switch (a.ring_.kind()) {
  case RingKind::Rational:
    std::get<mpq_class>(r.value_) = -std::get<mpq_class>(a.value_);
    break;
  case RingKind::PAdic:
    r.value_ = ops_for(a.ring_).neg(std::get<PAdicValue>(a.value_));
    break;
  case RingKind::PAdicT: {
    auto ops = ops_for(a.ring_);
    for (auto &c : std::get<Poly>(r.value_))
      c = ops.neg(c);
    break;
  }
  }
  return r;
}

Coeff Coeff::div_exact(const mpz_class &n) const {
  if (n == 0)
    throw std::domain_error("division by zero");
  Coeff r = *this;
  switch (ring_.kind()) {
  case RingKind::Rational:
    std::get<mpq_class>(r.value_) /= mpq_class(n);
    break;
  case RingKind::PAdic:
    r.value_ = ops_for(ring_).div_exact(std::get<PAdicValue>(value_), n);
    break;
  case RingKind::PAdicT: {
    auto ops = ops_for(ring_);
    for (auto &c : std::get<Poly>(r.value_))
      c = ops.div_exact(c, n);
    break;
  }
  }
  return r;
}

Coeff Coeff::inverse() const {
  Coeff r = *this;
  switch (ring_.kind()) {
  case RingKind::Rational:
    if (is_zero())
      throw std::domain_error("inverse of zero");
    std::get<mpq_class>(r.value_) = 1 / std::get<mpq_class>(value_);
    break;
  case RingKind::PAdic:
    r.value_ = ops_for(ring_).inverse(std::get<PAdicValue>(value_));
    break;
  case RingKind::PAdicT: {
    auto ops = ops_for(ring_);
    const auto &a = std::get<Poly>(value_);
    Poly b(a.size());
    b[0] = ops.inverse(a[0]);
    for (size_t k = 1; k < a.size(); ++k) {
      PAdicValue acc;
      for (size_t j = 1; j <= k; ++j)
        acc = ops.add(acc, ops.mul(a[j], b[k - j]));
      b[k] = ops.neg(ops.mul(b[0], acc));
    }
    r.value_ = std::move(b);
    break;
  }
  }
  return r;
}

Coeff Coeff::scaled(const mpq_class &q) const {
  if (ring_.kind() == RingKind::Rational) {
    Coeff r = *this;
    std::get<mpq_class>(r.value_) *= q;
    return r;
  }
  Coeff r = *this * from_integer(ring_, q.get_num());
  if (q.get_den() != 1)
    r = r.div_exact(q.get_den());
  return r;
}

Coeff Coeff::with_precision(int precision) const {
  Coeff r = *this;
  switch (ring_.kind()) {
  case RingKind::Rational:
    break;
  case RingKind::PAdic:
    r.value_ = ops_for(ring_).cap(std::get<PAdicValue>(value_), precision);
    break;
  case RingKind::PAdicT: {
    auto ops = ops_for(ring_);
    for (auto &c : std::get<Poly>(r.value_))
      c = ops.cap(c, precision);
    break;
  }
  }
  return r;
}

bool Coeff::agree_mod(const Coeff &a, const Coeff &b, int k) {
  a.check_ring(b);
  Coeff d = a - b;
  switch (a.ring_.kind()) {
  case RingKind::Rational:
    return d.is_zero();
  case RingKind::PAdic:
    return std::get<PAdicValue>(d.value_).shift >= k;
  case RingKind::PAdicT:
    for (const auto &c : std::get<Poly>(d.value_))
      if (c.shift < k)
        return false;
    return true;
  }
  return false;
}

bool operator==(const Coeff &a, const Coeff &b) {
  if (!(a.ring_ == b.ring_))
    return false;
  if (a.ring_.kind() == RingKind::Rational)
    return std::get<mpq_class>(a.value_) == std::get<mpq_class>(b.value_);
  return (a - b).is_zero();
}

const mpq_class &Coeff::rational() const {
  if (ring_.kind() != RingKind::Rational)
    throw std::invalid_argument("not a Rational coefficient");
  return std::get<mpq_class>(value_);
}

const PAdicValue &Coeff::padic() const {
  if (ring_.kind() != RingKind::PAdic)
    throw std::invalid_argument("not a PAdic coefficient");
  return std::get<PAdicValue>(value_);
}

const std::vector<PAdicValue> &Coeff::padic_t() const {
  if (ring_.kind() != RingKind::PAdicT)
    throw std::invalid_argument("not a PAdicT coefficient");
  return std::get<Poly>(value_);
}

mpq_class Coeff::lift() const {
  switch (ring_.kind()) {
  case RingKind::Rational:
    return std::get<mpq_class>(value_);
  case RingKind::PAdic:
    return ops_for(ring_).lift(std::get<PAdicValue>(value_));
  case RingKind::PAdicT: {
    const auto &poly = std::get<Poly>(value_);
    for (size_t j = 1; j < poly.size(); ++j)
      if (!poly[j].is_zero())
        throw std::invalid_argument("t-dependent coefficient has no rational lift");
    return ops_for(ring_).lift(poly[0]);
  }
  }
  return 0;
}

std::string Coeff::to_string() const {
  switch (ring_.kind()) {
  case RingKind::Rational:
    return std::get<mpq_class>(value_).get_str();
  case RingKind::PAdic:
    return ops_for(ring_).to_string(std::get<PAdicValue>(value_));
  case RingKind::PAdicT: {
    auto ops = ops_for(ring_);
    const auto &poly = std::get<Poly>(value_);
    std::ostringstream out;
    bool first = true;
    for (size_t j = 0; j < poly.size(); ++j) {
      if (poly[j].is_zero())
        continue;
      if (!first)
        out << " + ";
      first = false;
      std::string c = ops.to_string(poly[j]);
      if (c.find(' ') != std::string::npos)
        c = "(" + c + ")";
      out << c;
      if (j == 1)
        out << "*t";
      else if (j > 1)
        out << "*t^" << j;
    }
    return first ? std::string("0") : out.str();
  }
  }
  return "?";
}

Point zero_point(Ring ring, int d) { return Point(static_cast<size_t>(d), Coeff::zero(ring)); }

bool is_zero_point(const Point &x) {
  for (const auto &c : x)
    if (!c.is_zero())
      return false;
  return true;
}

bool points_equal(const Point &a, const Point &b) {
  if (a.size() != b.size())
    return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (!(a[i] == b[i]))
      return false;
  return true;
}

bool points_agree_mod(const Point &a, const Point &b, int k) {
  if (a.size() != b.size())
    return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (!Coeff::agree_mod(a[i], b[i], k))
      return false;
  return true;
}

int point_min_valuation(const Point &x) {
  int best = kExactPrecision;
  for (const auto &c : x)
    best = std::min(best, c.min_valuation());
  return best;
}

std::string point_to_string(const Point &x) {
  std::string out = "(";
  for (size_t i = 0; i < x.size(); ++i)
    out += (i ? ", " : "") + x[i].to_string();
  return out + ")";
}

} // namespace fglie
