#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "fglie/series.hpp"

namespace fglie {

/// Raised when an operator series has no finite or convergent evaluation.
class NonTerminating : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// All monomials of total degree <= D in d variables, in graded order
/// (index 0 is the constant monomial).
class MonomialBasis {
public:
  static std::shared_ptr<const MonomialBasis> get(int nvars, int degree_bound);

  MonomialBasis(int nvars, int degree_bound);

  int nvars() const { return nvars_; }
  int degree_bound() const { return degree_bound_; }
  int size() const { return static_cast<int>(monomials_.size()); }
  const Monomial &operator[](int i) const { return monomials_[static_cast<size_t>(i)]; }
  const std::vector<Monomial> &monomials() const { return monomials_; }
  /// -1 when the monomial lies outside the basis.
  int index_of(const Monomial &m) const;
  /// Index of the coordinate function x_i.
  int variable_index(int i) const { return 1 + i; }
  /// Number of monomials of degree <= k.
  int count_up_to(int k) const;

private:
  int nvars_;
  int degree_bound_;
  std::vector<Monomial> monomials_;
  std::vector<int> degree_end_;
  std::map<Monomial, int> index_;
};

using BasisPtr = std::shared_ptr<const MonomialBasis>;

/// Linear operator on A_{<=D}, stored column-sparse in the monomial basis.
class TruncOperator {
public:
  struct Entry {
    int row;
    Coeff value;
  };
  using Column = std::vector<Entry>;

  TruncOperator() = default;
  TruncOperator(Ring ring, BasisPtr basis);

  static TruncOperator identity(Ring ring, BasisPtr basis);
  /// f -> f(images[0], ..., images[d-1]); each image is a series in the
  /// basis variables and may carry a constant term.
  static TruncOperator substitution(Ring ring, BasisPtr basis, std::span<const TruncSeries> images);

  Ring ring() const { return ring_; }
  const BasisPtr &basis() const { return basis_; }
  int dim() const { return static_cast<int>(columns_.size()); }
  int degree_bound() const { return basis_->degree_bound(); }
  const Column &column(int j) const { return columns_[static_cast<size_t>(j)]; }
  /// Replaces column j; entries must be sorted by row and nonzero.
  void set_column(int j, Column column);
  void set_column(int j, const TruncSeries &image);
  Coeff entry(int i, int j) const;

  TruncSeries image(int j) const;
  TruncSeries apply(const TruncSeries &f) const;

  bool is_zero() const;
  bool is_identity() const;
  size_t nonzeros() const;
  /// Minimum filtration order over stored entries.
  int min_filtration_order() const;
  /// Keeps rows and columns of degree <= k.  Exact for operators that do
  /// not raise degree.
  TruncOperator restricted(int k) const;
  TruncOperator with_precision(int precision) const;

  TruncOperator &operator+=(const TruncOperator &other);
  TruncOperator &operator-=(const TruncOperator &other);
  friend TruncOperator operator+(TruncOperator a, const TruncOperator &b) { return a += b; }
  friend TruncOperator operator-(TruncOperator a, const TruncOperator &b) { return a -= b; }
  /// Composition: (a * b)(f) = a(b(f)).
  friend TruncOperator operator*(const TruncOperator &a, const TruncOperator &b);
  friend TruncOperator operator*(const Coeff &c, const TruncOperator &a);
  friend bool operator==(const TruncOperator &a, const TruncOperator &b);

  /// True when every entry of a - b vanishes modulo p^k.
  static bool agree_mod(const TruncOperator &a, const TruncOperator &b, int k);

  std::string to_string() const;

private:
  Ring ring_;
  BasisPtr basis_;
  std::vector<Column> columns_;

  void check_shape(const TruncOperator &other) const;
};

/// a b - b a
TruncOperator commutator(const TruncOperator &a, const TruncOperator &b);

struct OperatorSeries {
  TruncOperator value;
  int terms = 0;
  /// False when the result is a truncation of a non-terminating rational
  /// series (see truncate_terms).
  bool exact = true;
};

/// sum_{i>=1} (-1)^{i+1} (T - 1)^i / i.
/// Rational: exact when T - 1 is nilpotent; otherwise the first
/// truncate_terms terms are returned (flagged inexact) or NonTerminating is
/// raised.  p-adic: summed until the remaining terms are provably zero
/// modulo p^N.
OperatorSeries operator_log(const TruncOperator &T, std::optional<int> truncate_terms = std::nullopt);

/// sum_{n>=0} W^n / n!, with the same termination rules as operator_log.
OperatorSeries operator_exp(const TruncOperator &W, std::optional<int> truncate_terms = std::nullopt);

/// sum_i [..[[w, a], a].., a] / i!  (i-fold), which equals e^{-a} w e^{a}.
OperatorSeries operator_adjoint_exp(const TruncOperator &a, const TruncOperator &w,
                                    std::optional<int> truncate_terms = std::nullopt);

/// (T - 1)^m = 0 on the block of degrees 1..k-1, m the block dimension.
bool is_unipotent(const TruncOperator &T, int k);

/// W(f g) = W(f) g + f W(g) for all basis monomials f, g of degree <=
/// factor_degree whose product stays inside the operator's basis; returns
/// the first violating pair.  With modulus_exponent k > 0 p-adic sides are
/// compared modulo p^k, otherwise at working precision.
std::optional<std::pair<int, int>> leibniz_violation(const TruncOperator &W, int factor_degree, int modulus_exponent = 0);

/// T(f g) = T(f) T(g) on the same pairs.
std::optional<std::pair<int, int>> multiplicativity_violation(const TruncOperator &T, int factor_degree,
                                                              int modulus_exponent = 0);

} // namespace fglie
