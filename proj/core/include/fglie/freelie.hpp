#pragma once

#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace fglie {

/// A word over the alphabet {1, ..., k}, stored as the characters '1'..'9'.
using Word = std::string;

/// Shorter words first, lexicographic within a length.
struct GradedWordLess {
  bool operator()(const Word &a, const Word &b) const {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  }
};

/// Raised when an associative series is not a Lie element.
class NotPrimitive : public std::runtime_error {
public:
  NotPrimitive(const std::string &what, Word witness) : std::runtime_error(what), witness_(std::move(witness)) {}
  const Word &witness() const { return witness_; }

private:
  Word witness_;
};

inline constexpr int kMaxGenerators = 9;

char letter(int i);
bool is_lyndon(const Word &w);

/// All Lyndon words over k letters of length <= max_length, graded order.
std::vector<Word> lyndon_words(int k, int max_length);

/// w = u v with v the longest proper Lyndon suffix.  Requires |w| >= 2.
std::pair<Word, Word> standard_factorization(const Word &w);

/// Nested commutator for a Lyndon word, e.g. "112" -> "[x1,[x1,x2]]".
std::string bracketing(const Word &w);

using WordPolynomial = std::map<Word, mpq_class, GradedWordLess>;

/// Truncated series in k non-commuting variables over Q.
class AssocSeries {
public:
  AssocSeries() = default;
  AssocSeries(int generators, int degree_bound);

  static AssocSeries one(int generators, int degree_bound);
  static AssocSeries generator(int generators, int degree_bound, int i);

  int generators() const { return k_; }
  int degree_bound() const { return n_; }
  const WordPolynomial &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  mpq_class coefficient(const Word &w) const;
  void add_term(const Word &w, const mpq_class &c);
  AssocSeries homogeneous_part(int degree) const;
  AssocSeries truncated(int degree_bound) const;

  AssocSeries &operator+=(const AssocSeries &other);
  AssocSeries &operator-=(const AssocSeries &other);
  friend AssocSeries operator+(AssocSeries a, const AssocSeries &b) { return a += b; }
  friend AssocSeries operator-(AssocSeries a, const AssocSeries &b) { return a -= b; }
  friend AssocSeries operator*(const AssocSeries &a, const AssocSeries &b);
  friend AssocSeries operator*(const mpq_class &c, const AssocSeries &a);
  friend bool operator==(const AssocSeries &a, const AssocSeries &b) = default;

  std::string to_string() const;

private:
  int k_ = 0;
  int n_ = 0;
  WordPolynomial terms_;

  void check_shape(const AssocSeries &other) const;
};

/// exp(a) for a series without constant term.
AssocSeries exp_series(const AssocSeries &a);
/// log(1 + u) for a series without constant term.
AssocSeries log_one_plus(const AssocSeries &u);
/// a b - b a
AssocSeries commutator(const AssocSeries &a, const AssocSeries &b);

/// Rational combination of bracketed Lyndon words.
class LieSeries {
public:
  LieSeries() = default;
  LieSeries(int generators, int degree_bound);

  static LieSeries generator(int generators, int degree_bound, int i);

  int generators() const { return k_; }
  int degree_bound() const { return n_; }
  const WordPolynomial &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  mpq_class coefficient(const Word &w) const;
  /// Adds c times the bracketed Lyndon word w.
  void add_term(const Word &w, const mpq_class &c);
  LieSeries homogeneous_part(int degree) const;
  LieSeries truncated(int degree_bound) const;

  LieSeries &operator+=(const LieSeries &other);
  LieSeries &operator-=(const LieSeries &other);
  friend LieSeries operator+(LieSeries a, const LieSeries &b) { return a += b; }
  friend LieSeries operator-(LieSeries a, const LieSeries &b) { return a -= b; }
  friend LieSeries operator*(const mpq_class &c, const LieSeries &a);
  friend bool operator==(const LieSeries &a, const LieSeries &b) = default;

  std::string to_string() const;

private:
  int k_ = 0;
  int n_ = 0;
  WordPolynomial terms_;
};

/// Expansion of the bracketed Lyndon word w in the free associative algebra.
/// Homogeneous of degree |w|; leading (smallest) word is w with coefficient 1.
const WordPolynomial &lyndon_expansion(const Word &w);

AssocSeries expand(const LieSeries &s);

/// The unique Lie series whose expansion is a; throws NotPrimitive when a
/// leftover remains after triangular elimination.
LieSeries project_to_lie(const AssocSeries &a);

/// [a, b] in the free Lie algebra, truncated at the common degree bound.
LieSeries lie_bracket(const LieSeries &a, const LieSeries &b);

/// Evaluates a Lie series in a concrete Lie algebra.  Generator i of the
/// series is sent to generators[i]; bracketed Lyndon words are evaluated
/// through their standard factorizations.
template <class T, class BracketFn, class ScaleFn, class AddFn, class IsZeroFn>
T evaluate_lie_series(const LieSeries &s, std::span<const T> generators, const T &zero, BracketFn bracket,
                      ScaleFn scale, AddFn add, IsZeroFn is_zero) {
  if (static_cast<int>(generators.size()) < s.generators())
    throw std::invalid_argument("evaluate_lie_series: not enough generators");
  std::map<Word, T, GradedWordLess> values;
  auto value_of = [&](auto &&self, const Word &w) -> const T & {
    auto it = values.find(w);
    if (it != values.end())
      return it->second;
    if (w.size() == 1)
      return values.emplace(w, generators[static_cast<size_t>(w[0] - '1')]).first->second;
    auto [u, v] = standard_factorization(w);
    const T &left = self(self, u);
    if (is_zero(left))
      return values.emplace(w, zero).first->second;
    const T &right = self(self, v);
    if (is_zero(right))
      return values.emplace(w, zero).first->second;
    T b = bracket(left, right);
    return values.emplace(w, std::move(b)).first->second;
  };
  T total = zero;
  for (const auto &[w, c] : s.terms()) {
    const T &v = value_of(value_of, w);
    if (!is_zero(v))
      total = add(total, scale(v, c));
  }
  return total;
}

} // namespace fglie
