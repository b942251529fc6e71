#pragma once

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace fglie {

using QVector = std::vector<mpq_class>;

/// Dense matrix over Q, row-major.
class QMatrix {
public:
  QMatrix() = default;
  QMatrix(int rows, int cols);
  static QMatrix identity(int n);
  static QMatrix from_rows(const std::vector<QVector> &rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  mpq_class &operator()(int i, int j) { return data_[static_cast<size_t>(i * cols_ + j)]; }
  const mpq_class &operator()(int i, int j) const { return data_[static_cast<size_t>(i * cols_ + j)]; }

  QVector row(int i) const;
  QVector column(int j) const;
  QMatrix transpose() const;
  mpq_class trace() const;
  bool is_zero() const;
  QVector apply(const QVector &v) const;

  friend QMatrix operator*(const QMatrix &a, const QMatrix &b);
  friend QMatrix operator+(const QMatrix &a, const QMatrix &b);
  friend QMatrix operator-(const QMatrix &a, const QMatrix &b);
  friend bool operator==(const QMatrix &a, const QMatrix &b) = default;

  std::string to_string() const;

private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<mpq_class> data_;
};

struct Echelon {
  QMatrix reduced;
  std::vector<int> pivots; // pivot column of each nonzero row
};

/// Reduced row echelon form.
Echelon rref(QMatrix m);
int rank(const QMatrix &m);
/// Basis of {v : m v = 0}, one vector per free column.
std::vector<QVector> nullspace(const QMatrix &m);
/// Some x with a x = b, if one exists.
std::optional<QVector> solve(const QMatrix &a, const QVector &b);

bool is_zero(const QVector &v);

/// A subspace of Q^n held as the nonzero rows of a reduced echelon basis.
class Subspace {
public:
  Subspace() = default;
  explicit Subspace(int ambient) : ambient_(ambient) {}
  static Subspace span(int ambient, const std::vector<QVector> &vectors);
  static Subspace whole(int ambient);

  int ambient() const { return ambient_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<QVector> &basis() const { return basis_; }

  bool contains(const QVector &v) const;
  bool contains(const Subspace &other) const;
  friend bool operator==(const Subspace &a, const Subspace &b) = default;

private:
  int ambient_ = 0;
  std::vector<QVector> basis_;
};

} // namespace fglie
