#pragma once

// Reference implementations used only by the tests.  None of them call into
// the library code they are compared against.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace oracle {

/// Dense square matrix over Q.
class Mat {
public:
  Mat() = default;
  explicit Mat(int n) : n_(n), a_(static_cast<size_t>(n * n), 0) {}
  static Mat identity(int n);

  int size() const { return n_; }
  mpq_class &operator()(int i, int j) { return a_[static_cast<size_t>(i * n_ + j)]; }
  const mpq_class &operator()(int i, int j) const { return a_[static_cast<size_t>(i * n_ + j)]; }
  bool is_zero() const;

  friend Mat operator+(const Mat &a, const Mat &b);
  friend Mat operator-(const Mat &a, const Mat &b);
  friend Mat operator*(const Mat &a, const Mat &b);
  friend Mat operator*(const mpq_class &c, const Mat &a);
  friend bool operator==(const Mat &a, const Mat &b) { return a.n_ == b.n_ && a.a_ == b.a_; }

  std::string to_string() const;

private:
  int n_ = 0;
  std::vector<mpq_class> a_;
};

/// exp(X) for nilpotent X: the series stops once X^k = 0.
Mat exp_nilpotent(const Mat &X);
/// log(U) for unipotent U.
Mat log_unipotent(const Mat &U);
Mat bracket(const Mat &a, const Mat &b);

/// Strictly upper triangular with entries num/den, |num| <= 5, den in 1..3.
Mat random_strict_upper(int n, std::mt19937_64 &rng);

/// Number of Lyndon words of length n over k letters (Witt's formula).
long necklace_count(int k, int n);

/// Lyndon words of length <= n over '1'..'k' by comparing every word with
/// all of its rotations; graded, lexicographic within a degree.
std::vector<std::string> lyndon_brute_force(int k, int n);

/// v_p(q) via repeated division; q != 0.
int valuation(const mpq_class &q, int p);

} // namespace oracle
