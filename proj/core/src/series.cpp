#include "fglie/series.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace fglie {

Monomial::Monomial(std::vector<int> exps) : exps_(std::move(exps)) {
  for (int e : exps_) {
    if (e < 0)
      throw std::invalid_argument("negative exponent");
    degree_ += e;
  }
}

Monomial Monomial::unit(int nvars, int i) {
  Monomial m(nvars);
  m.set(i, 1);
  return m;
}

void Monomial::set(int i, int e) {
  degree_ += e - exps_[static_cast<size_t>(i)];
  exps_[static_cast<size_t>(i)] = e;
}

Monomial operator*(const Monomial &a, const Monomial &b) {
  Monomial r = a;
  for (size_t i = 0; i < r.exps_.size(); ++i)
    r.exps_[i] += b.exps_[i];
  r.degree_ = a.degree_ + b.degree_;
  return r;
}

std::string Monomial::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0)
      continue;
    if (!first)
      out << "*";
    first = false;
    out << "x" << (i + 1);
    if (exps_[i] > 1)
      out << "^" << exps_[i];
  }
  return first ? std::string("1") : out.str();
}

TruncSeries::TruncSeries(Ring ring, int nvars, int degree_bound)
    : ring_(ring), nvars_(nvars), degree_bound_(degree_bound) {
  if (nvars < 0)
    throw std::invalid_argument("negative variable count");
  if (degree_bound < 0)
    throw std::invalid_argument("negative degree bound");
}

TruncSeries TruncSeries::constant(Ring ring, int nvars, int degree_bound, const Coeff &c) {
  TruncSeries s(ring, nvars, degree_bound);
  s.add_term(Monomial(nvars), c);
  return s;
}

TruncSeries TruncSeries::variable(Ring ring, int nvars, int degree_bound, int i) {
  if (i < 0 || i >= nvars)
    throw std::out_of_range("variable index out of range");
  TruncSeries s(ring, nvars, degree_bound);
  s.add_term(Monomial::unit(nvars, i), Coeff::one(ring));
  return s;
}

TruncSeries TruncSeries::monomial(Ring ring, int nvars, int degree_bound, const Monomial &m, const Coeff &c) {
  TruncSeries s(ring, nvars, degree_bound);
  s.add_term(m, c);
  return s;
}

void TruncSeries::check_shape(const TruncSeries &other) const {
  if (!(ring_ == other.ring_))
    throw RingMismatch("series ring mismatch");
  if (nvars_ != other.nvars_ || degree_bound_ != other.degree_bound_)
    throw std::invalid_argument("series shape mismatch: (" + std::to_string(nvars_) + " vars, D=" +
                                std::to_string(degree_bound_) + ") vs (" + std::to_string(other.nvars_) +
                                " vars, D=" + std::to_string(other.degree_bound_) + ")");
}

Coeff TruncSeries::coefficient(const Monomial &m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Coeff::zero(ring_) : it->second;
}

Coeff TruncSeries::constant_term() const { return coefficient(Monomial(nvars_)); }

void TruncSeries::add_term(const Monomial &m, const Coeff &c) {
  if (m.nvars() != nvars_)
    throw std::invalid_argument("monomial has wrong variable count");
  if (m.degree() > degree_bound_ || c.is_zero())
    return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero())
      terms_.erase(it);
  }
}

void TruncSeries::add_scaled(const TruncSeries &other, const Coeff &c) {
  check_shape(other);
  if (c.is_zero())
    return;
  for (const auto &[m, a] : other.terms_)
    add_term(m, c * a);
}

TruncSeries TruncSeries::homogeneous_part(int k) const {
  TruncSeries r(ring_, nvars_, degree_bound_);
  for (const auto &[m, c] : terms_)
    if (m.degree() == k)
      r.terms_.emplace_hint(r.terms_.end(), m, c);
  return r;
}

TruncSeries TruncSeries::truncated(int degree_bound) const {
  TruncSeries r(ring_, nvars_, degree_bound);
  for (const auto &[m, c] : terms_)
    if (m.degree() <= degree_bound)
      r.terms_.emplace_hint(r.terms_.end(), m, c);
  return r;
}

TruncSeries TruncSeries::embedded(int nvars, int offset) const {
  if (offset < 0 || offset + nvars_ > nvars)
    throw std::invalid_argument("embedding does not fit");
  TruncSeries r(ring_, nvars, degree_bound_);
  for (const auto &[m, c] : terms_) {
    Monomial big(nvars);
    for (int i = 0; i < nvars_; ++i)
      big.set(offset + i, m[i]);
    r.terms_.emplace(big, c);
  }
  return r;
}

int TruncSeries::order() const { return terms_.empty() ? kExactPrecision : terms_.begin()->first.degree(); }

int TruncSeries::min_valuation() const {
  int best = kExactPrecision;
  for (const auto &[m, c] : terms_)
    best = std::min(best, c.min_valuation());
  return best;
}

TruncSeries &TruncSeries::operator+=(const TruncSeries &other) {
  check_shape(other);
  for (const auto &[m, c] : other.terms_)
    add_term(m, c);
  return *this;
}

TruncSeries &TruncSeries::operator-=(const TruncSeries &other) {
  check_shape(other);
  for (const auto &[m, c] : other.terms_)
    add_term(m, -c);
  return *this;
}

TruncSeries operator-(const TruncSeries &a) {
  TruncSeries r = a;
  for (auto &[m, c] : r.terms_)
    c = -c;
  return r;
}

TruncSeries operator*(const TruncSeries &a, const TruncSeries &b) { return mul(a, b); }

TruncSeries operator*(const Coeff &c, const TruncSeries &a) {
  TruncSeries r(a.ring(), a.nvars(), a.degree_bound());
  r.add_scaled(a, c);
  return r;
}

bool operator==(const TruncSeries &a, const TruncSeries &b) {
  if (!(a.ring_ == b.ring_) || a.nvars_ != b.nvars_ || a.degree_bound_ != b.degree_bound_)
    return false;
  if (a.terms_.size() != b.terms_.size())
    return false;
  auto it = b.terms_.begin();
  for (const auto &[m, c] : a.terms_) {
    if (!(it->first == m) || !(it->second == c))
      return false;
    ++it;
  }
  return true;
}

std::string TruncSeries::to_string() const {
  if (terms_.empty())
    return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto &[m, c] : terms_) {
    if (!first)
      out << " + ";
    first = false;
    std::string cs = c.to_string();
    bool wrap = cs.find_first_of(" +") != std::string::npos ||
                (cs.find('-') != std::string::npos && m.degree() > 0);
    if (m.degree() == 0) {
      out << cs;
    } else if (c.is_one()) {
      out << m.to_string();
    } else {
      out << (wrap ? "(" + cs + ")" : cs) << "*" << m.to_string();
    }
  }
  return out.str();
}

TruncSeries mul(const TruncSeries &f, const TruncSeries &g) {
  if (!(f.ring() == g.ring()))
    throw RingMismatch("series ring mismatch");
  if (f.nvars() != g.nvars() || f.degree_bound() != g.degree_bound())
    throw std::invalid_argument("series shape mismatch in mul");
  TruncSeries r(f.ring(), f.nvars(), f.degree_bound());
  const int bound = f.degree_bound();
  for (const auto &[ma, ca] : f.terms()) {
    for (const auto &[mb, cb] : g.terms()) {
      // terms are sorted by degree, so later ones in g only get larger
      if (ma.degree() + mb.degree() > bound)
        break;
      r.add_term(ma * mb, ca * cb);
    }
  }
  return r;
}

namespace {

TruncSeries compose_impl(const TruncSeries &f, std::span<const TruncSeries> args, bool strict) {
  if (static_cast<int>(args.size()) != f.nvars())
    throw std::invalid_argument("substitute: expected " + std::to_string(f.nvars()) + " arguments, got " +
                                std::to_string(args.size()));
  if (args.empty())
    throw std::invalid_argument("substitute: no arguments");
  const TruncSeries &first = args[0];
  for (const auto &a : args) {
    if (!(a.ring() == f.ring()) || !(a.ring() == first.ring()))
      throw RingMismatch("substitute: ring mismatch");
    if (a.nvars() != first.nvars() || a.degree_bound() != first.degree_bound())
      throw std::invalid_argument("substitute: arguments differ in shape");
    if (strict && !a.constant_term().is_zero())
      throw std::invalid_argument("substitute: argument has a nonzero constant term");
  }
  const Ring ring = f.ring();
  const int m = first.nvars();
  const int bound = first.degree_bound();
  const int n = f.nvars();

  std::vector<int> max_exp(static_cast<size_t>(n), 0);
  for (const auto &[mono, c] : f.terms()) {
    if (strict && mono.degree() > bound)
      continue;
    for (int i = 0; i < n; ++i)
      max_exp[static_cast<size_t>(i)] = std::max(max_exp[static_cast<size_t>(i)], mono[i]);
  }
  std::vector<std::vector<TruncSeries>> powers(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    auto &pw = powers[static_cast<size_t>(i)];
    pw.push_back(TruncSeries::constant(ring, m, bound, Coeff::one(ring)));
    for (int e = 1; e <= max_exp[static_cast<size_t>(i)]; ++e)
      pw.push_back(mul(pw.back(), args[static_cast<size_t>(i)]));
  }

  TruncSeries result(ring, m, bound);
  for (const auto &[mono, c] : f.terms()) {
    if (strict && mono.degree() > bound)
      continue;
    TruncSeries term = TruncSeries::constant(ring, m, bound, c);
    for (int i = 0; i < n && !term.is_zero(); ++i)
      if (mono[i] > 0)
        term = mul(term, powers[static_cast<size_t>(i)][static_cast<size_t>(mono[i])]);
    result += term;
  }
  return result;
}

} // namespace

TruncSeries substitute(const TruncSeries &f, std::span<const TruncSeries> args) {
  return compose_impl(f, args, true);
}

TruncSeries compose_polynomial(const TruncSeries &f, std::span<const TruncSeries> args) {
  return compose_impl(f, args, false);
}

TruncSeries partial(const TruncSeries &f, int i) {
  if (i < 0 || i >= f.nvars())
    throw std::out_of_range("partial: variable index out of range");
  TruncSeries r(f.ring(), f.nvars(), f.degree_bound());
  for (const auto &[m, c] : f.terms()) {
    int e = m[i];
    if (e == 0)
      continue;
    Monomial d = m;
    d.set(i, e - 1);
    r.add_term(d, c * Coeff::from_int(f.ring(), e));
  }
  return r;
}

Coeff eval_at_point(const TruncSeries &f, std::span<const Coeff> point) {
  if (static_cast<int>(point.size()) != f.nvars())
    throw std::invalid_argument("eval_at_point: point has wrong dimension");
  const Ring ring = f.ring();
  for (const auto &x : point) {
    if (!(x.ring() == ring))
      throw RingMismatch("eval_at_point: ring mismatch");
    if (!ring.is_rational() && !x.in_maximal_ideal())
      throw std::domain_error("eval_at_point: coordinate " + x.to_string() + " is not in the maximal ideal");
  }
  std::vector<std::vector<Coeff>> powers(point.size());
  Coeff sum = Coeff::zero(ring);
  for (const auto &[m, c] : f.terms()) {
    Coeff term = c;
    for (int i = 0; i < f.nvars(); ++i) {
      int e = m[i];
      if (e == 0)
        continue;
      auto &pw = powers[static_cast<size_t>(i)];
      if (pw.empty())
        pw.push_back(Coeff::one(ring));
      while (static_cast<int>(pw.size()) <= e)
        pw.push_back(pw.back() * point[static_cast<size_t>(i)]);
      term *= pw[static_cast<size_t>(e)];
    }
    sum += term;
  }
  return sum;
}

TruncSeries specialize_tail(const TruncSeries &f, int first, std::span<const Coeff> values) {
  if (first < 0 || first + static_cast<int>(values.size()) != f.nvars())
    throw std::invalid_argument("specialize_tail: value count does not match");
  const Ring ring = f.ring();
  std::vector<std::vector<Coeff>> powers(values.size());
  TruncSeries r(ring, first, f.degree_bound());
  for (const auto &[m, c] : f.terms()) {
    Coeff coeff = c;
    Monomial head(first);
    for (int i = 0; i < first; ++i)
      head.set(i, m[i]);
    for (int j = 0; j < static_cast<int>(values.size()); ++j) {
      int e = m[first + j];
      if (e == 0)
        continue;
      auto &pw = powers[static_cast<size_t>(j)];
      if (pw.empty())
        pw.push_back(Coeff::one(ring));
      while (static_cast<int>(pw.size()) <= e)
        pw.push_back(pw.back() * values[static_cast<size_t>(j)]);
      coeff *= pw[static_cast<size_t>(e)];
    }
    r.add_term(head, coeff);
  }
  return r;
}

} // namespace fglie
