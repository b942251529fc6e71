#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "fglie/coeff.hpp"

namespace fglie {

/// Exponent vector of a monomial x_1^e_1 ... x_n^e_n.
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(int nvars) : exps_(static_cast<size_t>(nvars), 0) {}
  explicit Monomial(std::vector<int> exps);

  static Monomial unit(int nvars, int i);

  int nvars() const { return static_cast<int>(exps_.size()); }
  int degree() const { return degree_; }
  int operator[](int i) const { return exps_[static_cast<size_t>(i)]; }
  void set(int i, int e);
  const std::vector<int> &exponents() const { return exps_; }

  friend Monomial operator*(const Monomial &a, const Monomial &b);
  friend bool operator==(const Monomial &a, const Monomial &b) = default;

  /// Graded order: lower total degree first, then x_1^2 before x_1 x_2
  /// before x_2^2 within a degree.
  friend bool operator<(const Monomial &a, const Monomial &b) {
    if (a.degree_ != b.degree_)
      return a.degree_ < b.degree_;
    return a.exps_ > b.exps_;
  }

  std::string to_string() const;

private:
  std::vector<int> exps_;
  int degree_ = 0;
};

/// Multivariate power series over a coefficient ring, truncated above a
/// total degree bound.  Zero coefficients are never stored.
class TruncSeries {
public:
  using TermMap = std::map<Monomial, Coeff>;

  TruncSeries() = default;
  TruncSeries(Ring ring, int nvars, int degree_bound);

  static TruncSeries constant(Ring ring, int nvars, int degree_bound, const Coeff &c);
  /// The coordinate function x_i (0-based).
  static TruncSeries variable(Ring ring, int nvars, int degree_bound, int i);
  static TruncSeries monomial(Ring ring, int nvars, int degree_bound, const Monomial &m, const Coeff &c);

  Ring ring() const { return ring_; }
  int nvars() const { return nvars_; }
  int degree_bound() const { return degree_bound_; }
  const TermMap &terms() const { return terms_; }
  size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Coeff coefficient(const Monomial &m) const;
  Coeff constant_term() const;
  /// Adds c * m; ignored beyond the degree bound, removed if it cancels.
  void add_term(const Monomial &m, const Coeff &c);
  void add_scaled(const TruncSeries &other, const Coeff &c);

  TruncSeries homogeneous_part(int k) const;
  TruncSeries truncated(int degree_bound) const;
  /// Same terms under a new variable count; the extra variables are unused.
  TruncSeries embedded(int nvars, int offset) const;
  /// Lowest degree carrying a nonzero term (kExactPrecision for zero).
  int order() const;
  /// Minimum coefficient valuation lower bound over stored terms.
  int min_valuation() const;

  TruncSeries &operator+=(const TruncSeries &other);
  TruncSeries &operator-=(const TruncSeries &other);
  friend TruncSeries operator+(TruncSeries a, const TruncSeries &b) { return a += b; }
  friend TruncSeries operator-(TruncSeries a, const TruncSeries &b) { return a -= b; }
  friend TruncSeries operator-(const TruncSeries &a);
  friend TruncSeries operator*(const TruncSeries &a, const TruncSeries &b);
  friend TruncSeries operator*(const Coeff &c, const TruncSeries &a);

  friend bool operator==(const TruncSeries &a, const TruncSeries &b);

  std::string to_string() const;

private:
  Ring ring_;
  int nvars_ = 0;
  int degree_bound_ = 0;
  TermMap terms_;

  void check_shape(const TruncSeries &other) const;
};

TruncSeries mul(const TruncSeries &f, const TruncSeries &g);

/// f(args[0], ..., args[n-1]) truncated at the arguments' degree bound.
/// Every argument must have zero constant term.
TruncSeries substitute(const TruncSeries &f, std::span<const TruncSeries> args);

/// Like substitute, but arguments may carry constant terms.  The stored
/// terms of f are treated as a polynomial, so the result is the image of
/// that polynomial, truncated at the arguments' degree bound.
TruncSeries compose_polynomial(const TruncSeries &f, std::span<const TruncSeries> args);

/// Formal partial derivative with respect to x_i (0-based).
TruncSeries partial(const TruncSeries &f, int i);

/// Sum of c_a * point^a over the stored terms.  Over p-adic rings every
/// coordinate must lie in the maximal ideal.
Coeff eval_at_point(const TruncSeries &f, std::span<const Coeff> point);

/// Replaces the variables with index >= first by the given constants and
/// drops them, leaving a series in the first `first` variables.
TruncSeries specialize_tail(const TruncSeries &f, int first, std::span<const Coeff> values);

} // namespace fglie
