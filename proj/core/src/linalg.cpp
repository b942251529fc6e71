#include "fglie/linalg.hpp"

#include <sstream>
#include <stdexcept>

namespace fglie {

QMatrix::QMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows * cols)) {
  if (rows < 0 || cols < 0)
    throw std::invalid_argument("negative matrix size");
}

QMatrix QMatrix::identity(int n) {
  QMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    m(i, i) = 1;
  return m;
}

QMatrix QMatrix::from_rows(const std::vector<QVector> &rows, int cols) {
  QMatrix m(static_cast<int>(rows.size()), cols);
  for (int i = 0; i < m.rows_; ++i) {
    if (static_cast<int>(rows[static_cast<size_t>(i)].size()) != cols)
      throw std::invalid_argument("ragged matrix rows");
    for (int j = 0; j < cols; ++j)
      m(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
  }
  return m;
}

QVector QMatrix::row(int i) const {
  return QVector(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

QVector QMatrix::column(int j) const {
  QVector v(static_cast<size_t>(rows_));
  for (int i = 0; i < rows_; ++i)
    v[static_cast<size_t>(i)] = (*this)(i, j);
  return v;
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      t(j, i) = (*this)(i, j);
  return t;
}

mpq_class QMatrix::trace() const {
  if (rows_ != cols_)
    throw std::invalid_argument("trace of a non-square matrix");
  mpq_class t = 0;
  for (int i = 0; i < rows_; ++i)
    t += (*this)(i, i);
  return t;
}

bool QMatrix::is_zero() const {
  for (const auto &x : data_)
    if (x != 0)
      return false;
  return true;
}

QVector QMatrix::apply(const QVector &v) const {
  if (static_cast<int>(v.size()) != cols_)
    throw std::invalid_argument("matrix-vector size mismatch");
  QVector r(static_cast<size_t>(rows_));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (v[static_cast<size_t>(j)] != 0)
        r[static_cast<size_t>(i)] += (*this)(i, j) * v[static_cast<size_t>(j)];
  return r;
}

QMatrix operator*(const QMatrix &a, const QMatrix &b) {
  if (a.cols_ != b.rows_)
    throw std::invalid_argument("matrix product size mismatch");
  QMatrix r(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const mpq_class &x = a(i, k);
      if (x == 0)
        continue;
      for (int j = 0; j < b.cols_; ++j)
        if (b(k, j) != 0)
          r(i, j) += x * b(k, j);
    }
  return r;
}

QMatrix operator+(const QMatrix &a, const QMatrix &b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw std::invalid_argument("matrix sum size mismatch");
  QMatrix r = a;
  for (size_t i = 0; i < r.data_.size(); ++i)
    r.data_[i] += b.data_[i];
  return r;
}

QMatrix operator-(const QMatrix &a, const QMatrix &b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw std::invalid_argument("matrix difference size mismatch");
  QMatrix r = a;
  for (size_t i = 0; i < r.data_.size(); ++i)
    r.data_[i] -= b.data_[i];
  return r;
}

std::string QMatrix::to_string() const {
  std::ostringstream out;
  for (int i = 0; i < rows_; ++i) {
    out << "[";
    for (int j = 0; j < cols_; ++j)
      out << (j ? " " : "") << (*this)(i, j).get_str();
    out << "]\n";
  }
  return out.str();
}

Echelon rref(QMatrix m) {
  Echelon e;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int pivot = -1;
    for (int i = r; i < m.rows(); ++i)
      if (m(i, c) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0)
      continue;
    if (pivot != r)
      for (int j = 0; j < m.cols(); ++j)
        std::swap(m(pivot, j), m(r, j));
    mpq_class inv = 1 / m(r, c);
    for (int j = c; j < m.cols(); ++j)
      m(r, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0)
        continue;
      mpq_class f = m(i, c);
      for (int j = c; j < m.cols(); ++j)
        m(i, j) -= f * m(r, j);
    }
    e.pivots.push_back(c);
    ++r;
  }
  e.reduced = std::move(m);
  return e;
}

int rank(const QMatrix &m) { return static_cast<int>(rref(m).pivots.size()); }

std::vector<QVector> nullspace(const QMatrix &m) {
  Echelon e = rref(m);
  std::vector<bool> is_pivot(static_cast<size_t>(m.cols()), false);
  for (int c : e.pivots)
    is_pivot[static_cast<size_t>(c)] = true;
  std::vector<QVector> basis;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[static_cast<size_t>(free)])
      continue;
    QVector v(static_cast<size_t>(m.cols()));
    v[static_cast<size_t>(free)] = 1;
    for (size_t r = 0; r < e.pivots.size(); ++r)
      v[static_cast<size_t>(e.pivots[r])] = -e.reduced(static_cast<int>(r), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<QVector> solve(const QMatrix &a, const QVector &b) {
  if (static_cast<int>(b.size()) != a.rows())
    throw std::invalid_argument("solve: right-hand side size mismatch");
  QMatrix aug(a.rows(), a.cols() + 1);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j)
      aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[static_cast<size_t>(i)];
  }
  Echelon e = rref(std::move(aug));
  QVector x(static_cast<size_t>(a.cols()));
  for (size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] == a.cols())
      return std::nullopt;
    x[static_cast<size_t>(e.pivots[r])] = e.reduced(static_cast<int>(r), a.cols());
  }
  return x;
}

bool is_zero(const QVector &v) {
  for (const auto &x : v)
    if (x != 0)
      return false;
  return true;
}

Subspace Subspace::span(int ambient, const std::vector<QVector> &vectors) {
  Subspace s(ambient);
  if (vectors.empty())
    return s;
  Echelon e = rref(QMatrix::from_rows(vectors, ambient));
  for (size_t r = 0; r < e.pivots.size(); ++r)
    s.basis_.push_back(e.reduced.row(static_cast<int>(r)));
  return s;
}

Subspace Subspace::whole(int ambient) {
  std::vector<QVector> unit;
  for (int i = 0; i < ambient; ++i) {
    QVector v(static_cast<size_t>(ambient));
    v[static_cast<size_t>(i)] = 1;
    unit.push_back(std::move(v));
  }
  return span(ambient, unit);
}

bool Subspace::contains(const QVector &v) const {
  if (static_cast<int>(v.size()) != ambient_)
    throw std::invalid_argument("subspace membership: dimension mismatch");
  std::vector<QVector> rows = basis_;
  rows.push_back(v);
  return rank(QMatrix::from_rows(rows, ambient_)) == dim();
}

bool Subspace::contains(const Subspace &other) const {
  for (const auto &v : other.basis_)
    if (!contains(v))
      return false;
  return true;
}

} // namespace fglie
