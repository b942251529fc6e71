#include "fglie/operator.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

namespace fglie {

namespace {

// A p-adic zero known only to low precision is kept so that the loss stays
// visible; exact and full-precision zeros are dropped.
bool droppable(const Coeff &c) {
  if (!c.is_zero())
    return false;
  Ring r = c.ring();
  return r.is_rational() || c.absolute_precision() >= r.precision();
}

int floor_log(int i, int p) {
  int k = 0;
  for (long v = p; v <= i; v *= p)
    ++k;
  return k;
}

// Dense scratch column reused across a product.
class Accumulator {
public:
  Accumulator(Ring ring, int n) : zero_(Coeff::zero(ring)), work_(static_cast<size_t>(n), zero_), touched_(static_cast<size_t>(n), 0) {}

  void add_product(int row, const Coeff &a, const Coeff &b) {
    mark(row);
    work_[static_cast<size_t>(row)].add_product(a, b);
  }
  void add(int row, const Coeff &a) {
    mark(row);
    work_[static_cast<size_t>(row)] += a;
  }

  TruncOperator::Column flush() {
    std::sort(rows_.begin(), rows_.end());
    TruncOperator::Column col;
    col.reserve(rows_.size());
    for (int r : rows_) {
      auto &c = work_[static_cast<size_t>(r)];
      if (!droppable(c))
        col.push_back({r, std::move(c)});
      c = zero_;
      touched_[static_cast<size_t>(r)] = 0;
    }
    rows_.clear();
    return col;
  }

private:
  Coeff zero_;
  std::vector<Coeff> work_;
  std::vector<char> touched_;
  std::vector<int> rows_;

  void mark(int row) {
    if (!touched_[static_cast<size_t>(row)]) {
      touched_[static_cast<size_t>(row)] = 1;
      rows_.push_back(row);
    }
  }
};

TruncOperator minus_identity(const TruncOperator &T) {
  return T - TruncOperator::identity(T.ring(), T.basis());
}

// Guaranteed p-adic valuation of the i-th term of a series whose i-th power
// has filtration order >= i * gain and whose coefficient denominator has
// valuation at most loss(i).
template <class Loss> bool tail_negligible(Ring ring, int i, int gain, Loss loss) {
  const int m = ring.kind() == RingKind::PAdicT ? ring.t_precision() : 1;
  long bound = static_cast<long>(i) * gain - (m - 1) - loss(i);
  return bound >= ring.precision();
}

void require_gain(Ring ring, int gain, bool factorial) {
  if (gain >= kExactPrecision)
    return;
  if (gain < 1 || (factorial && ring.prime() == 2 && gain < 2))
    throw NonTerminating("operator series does not converge: entries have filtration order " +
                         std::to_string(gain) + " (need >= " +
                         std::to_string(factorial && ring.prime() == 2 ? 2 : 1) + ")");
}

} // namespace

// ---------------------------------------------------------------------------

std::shared_ptr<const MonomialBasis> MonomialBasis::get(int nvars, int degree_bound) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::shared_ptr<const MonomialBasis>> cache;
  std::lock_guard lock(mutex);
  auto &slot = cache[{nvars, degree_bound}];
  if (!slot)
    slot = std::make_shared<const MonomialBasis>(nvars, degree_bound);
  return slot;
}

MonomialBasis::MonomialBasis(int nvars, int degree_bound) : nvars_(nvars), degree_bound_(degree_bound) {
  if (nvars < 1 || degree_bound < 0)
    throw std::invalid_argument("monomial basis needs nvars >= 1 and D >= 0");
  // exponent vectors of each degree in decreasing lexicographic order
  std::vector<int> e(static_cast<size_t>(nvars), 0);
  auto fill = [&](auto &&self, int var, int remaining) -> void {
    if (var == nvars - 1) {
      e[static_cast<size_t>(var)] = remaining;
      monomials_.emplace_back(e);
      return;
    }
    for (int k = remaining; k >= 0; --k) {
      e[static_cast<size_t>(var)] = k;
      self(self, var + 1, remaining - k);
    }
  };
  for (int deg = 0; deg <= degree_bound; ++deg) {
    fill(fill, 0, deg);
    degree_end_.push_back(static_cast<int>(monomials_.size()));
  }
  for (int i = 0; i < size(); ++i)
    index_.emplace(monomials_[static_cast<size_t>(i)], i);
}

int MonomialBasis::index_of(const Monomial &m) const {
  auto it = index_.find(m);
  return it == index_.end() ? -1 : it->second;
}

int MonomialBasis::count_up_to(int k) const {
  if (k < 0)
    return 0;
  return degree_end_[static_cast<size_t>(std::min(k, degree_bound_))];
}

// ---------------------------------------------------------------------------

TruncOperator::TruncOperator(Ring ring, BasisPtr basis)
    : ring_(ring), basis_(std::move(basis)), columns_(static_cast<size_t>(basis_->size())) {}

TruncOperator TruncOperator::identity(Ring ring, BasisPtr basis) {
  TruncOperator op(ring, std::move(basis));
  for (int j = 0; j < op.dim(); ++j)
    op.columns_[static_cast<size_t>(j)].push_back({j, Coeff::one(ring)});
  return op;
}

TruncOperator TruncOperator::substitution(Ring ring, BasisPtr basis, std::span<const TruncSeries> images) {
  const int d = basis->nvars();
  const int D = basis->degree_bound();
  if (static_cast<int>(images.size()) != d)
    throw std::invalid_argument("substitution operator needs one image per variable");
  std::vector<TruncSeries> imgs;
  for (const auto &g : images) {
    if (g.nvars() != d || !(g.ring() == ring))
      throw std::invalid_argument("substitution image has the wrong shape");
    TruncSeries t(ring, d, D);
    for (const auto &[m, c] : g.terms())
      t.add_term(m, c);
    imgs.push_back(std::move(t));
  }
  TruncOperator op(ring, basis);
  std::vector<TruncSeries> value(static_cast<size_t>(basis->size()));
  value[0] = TruncSeries::constant(ring, d, D, Coeff::one(ring));
  op.set_column(0, value[0]);
  for (int j = 1; j < basis->size(); ++j) {
    const Monomial &m = (*basis)[j];
    int k = 0;
    while (m[k] == 0)
      ++k;
    Monomial lower = m;
    lower.set(k, m[k] - 1);
    value[static_cast<size_t>(j)] = mul(value[static_cast<size_t>(basis->index_of(lower))], imgs[static_cast<size_t>(k)]);
    op.set_column(j, value[static_cast<size_t>(j)]);
  }
  return op;
}

void TruncOperator::check_shape(const TruncOperator &other) const {
  if (!(ring_ == other.ring_))
    throw RingMismatch("operators over different rings");
  if (basis_ != other.basis_)
    throw std::invalid_argument("operators on different truncated algebras");
}

void TruncOperator::set_column(int j, Column column) { columns_[static_cast<size_t>(j)] = std::move(column); }

void TruncOperator::set_column(int j, const TruncSeries &image) {
  if (image.nvars() != basis_->nvars())
    throw std::invalid_argument("column image has the wrong variable count");
  Column col;
  for (const auto &[m, c] : image.terms()) {
    if (m.degree() > basis_->degree_bound())
      continue;
    col.push_back({basis_->index_of(m), c});
  }
  std::sort(col.begin(), col.end(), [](const Entry &a, const Entry &b) { return a.row < b.row; });
  columns_[static_cast<size_t>(j)] = std::move(col);
}

Coeff TruncOperator::entry(int i, int j) const {
  const auto &col = columns_[static_cast<size_t>(j)];
  auto it = std::lower_bound(col.begin(), col.end(), i, [](const Entry &e, int r) { return e.row < r; });
  if (it != col.end() && it->row == i)
    return it->value;
  return Coeff::zero(ring_);
}

TruncSeries TruncOperator::image(int j) const {
  TruncSeries s(ring_, basis_->nvars(), basis_->degree_bound());
  for (const auto &e : columns_[static_cast<size_t>(j)])
    s.add_term((*basis_)[e.row], e.value);
  return s;
}

TruncSeries TruncOperator::apply(const TruncSeries &f) const {
  if (f.nvars() != basis_->nvars())
    throw std::invalid_argument("operator applied to a series in the wrong variables");
  Accumulator acc(ring_, dim());
  for (const auto &[m, c] : f.terms()) {
    if (m.degree() > basis_->degree_bound())
      continue;
    for (const auto &e : columns_[static_cast<size_t>(basis_->index_of(m))])
      acc.add_product(e.row, e.value, c);
  }
  TruncSeries s(ring_, basis_->nvars(), basis_->degree_bound());
  for (const auto &e : acc.flush())
    s.add_term((*basis_)[e.row], e.value);
  return s;
}

bool TruncOperator::is_zero() const {
  for (const auto &col : columns_)
    for (const auto &e : col)
      if (!e.value.is_zero())
        return false;
  return true;
}

bool TruncOperator::is_identity() const { return (*this - identity(ring_, basis_)).is_zero(); }

size_t TruncOperator::nonzeros() const {
  size_t n = 0;
  for (const auto &col : columns_)
    n += col.size();
  return n;
}

int TruncOperator::min_filtration_order() const {
  int best = kExactPrecision;
  for (const auto &col : columns_)
    for (const auto &e : col)
      if (!e.value.is_zero())
        best = std::min(best, e.value.filtration_order());
  return best;
}

TruncOperator TruncOperator::restricted(int k) const {
  BasisPtr small = MonomialBasis::get(basis_->nvars(), k);
  if (k > basis_->degree_bound())
    throw std::invalid_argument("cannot restrict to a larger degree bound");
  TruncOperator r(ring_, small);
  const int n = small->size();
  for (int j = 0; j < n; ++j) {
    Column col;
    for (const auto &e : columns_[static_cast<size_t>(j)])
      if (e.row < n)
        col.push_back(e);
    r.columns_[static_cast<size_t>(j)] = std::move(col);
  }
  return r;
}

TruncOperator TruncOperator::with_precision(int precision) const {
  if (ring_.is_rational())
    return *this;
  TruncOperator r(ring_, basis_);
  for (int j = 0; j < dim(); ++j)
    for (const auto &e : columns_[static_cast<size_t>(j)]) {
      Coeff c = e.value.with_precision(precision);
      if (!droppable(c))
        r.columns_[static_cast<size_t>(j)].push_back({e.row, std::move(c)});
    }
  return r;
}

namespace {
TruncOperator::Column merge(const TruncOperator::Column &a, const TruncOperator::Column &b, bool subtract) {
  TruncOperator::Column r;
  r.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].row < b[j].row)) {
      r.push_back(a[i++]);
    } else if (i == a.size() || b[j].row < a[i].row) {
      r.push_back({b[j].row, subtract ? -b[j].value : b[j].value});
      ++j;
    } else {
      Coeff c = subtract ? a[i].value - b[j].value : a[i].value + b[j].value;
      if (!droppable(c))
        r.push_back({a[i].row, std::move(c)});
      ++i;
      ++j;
    }
  }
  return r;
}
} // namespace

TruncOperator &TruncOperator::operator+=(const TruncOperator &other) {
  check_shape(other);
  for (int j = 0; j < dim(); ++j)
    columns_[static_cast<size_t>(j)] = merge(columns_[static_cast<size_t>(j)], other.columns_[static_cast<size_t>(j)], false);
  return *this;
}

TruncOperator &TruncOperator::operator-=(const TruncOperator &other) {
  check_shape(other);
  for (int j = 0; j < dim(); ++j)
    columns_[static_cast<size_t>(j)] = merge(columns_[static_cast<size_t>(j)], other.columns_[static_cast<size_t>(j)], true);
  return *this;
}

TruncOperator operator*(const TruncOperator &a, const TruncOperator &b) {
  a.check_shape(b);
  TruncOperator r(a.ring_, a.basis_);
  Accumulator acc(a.ring_, a.dim());
  for (int j = 0; j < b.dim(); ++j) {
    const auto &bcol = b.columns_[static_cast<size_t>(j)];
    if (bcol.empty())
      continue;
    for (const auto &be : bcol)
      for (const auto &ae : a.columns_[static_cast<size_t>(be.row)])
        acc.add_product(ae.row, ae.value, be.value);
    r.columns_[static_cast<size_t>(j)] = acc.flush();
  }
  return r;
}

TruncOperator operator*(const Coeff &c, const TruncOperator &a) {
  TruncOperator r(a.ring_, a.basis_);
  for (int j = 0; j < a.dim(); ++j)
    for (const auto &e : a.columns_[static_cast<size_t>(j)]) {
      Coeff v = c * e.value;
      if (!droppable(v))
        r.columns_[static_cast<size_t>(j)].push_back({e.row, std::move(v)});
    }
  return r;
}

bool operator==(const TruncOperator &a, const TruncOperator &b) {
  if (!(a.ring_ == b.ring_) || a.basis_ != b.basis_)
    return false;
  return (a - b).is_zero();
}

bool TruncOperator::agree_mod(const TruncOperator &a, const TruncOperator &b, int k) {
  a.check_shape(b);
  TruncOperator diff = a - b;
  Coeff zero = Coeff::zero(a.ring_);
  for (const auto &col : diff.columns_)
    for (const auto &e : col)
      if (!Coeff::agree_mod(e.value, zero, k))
        return false;
  return true;
}

std::string TruncOperator::to_string() const {
  std::ostringstream out;
  for (int j = 0; j < dim(); ++j) {
    if (columns_[static_cast<size_t>(j)].empty())
      continue;
    out << (*basis_)[j].to_string() << " -> " << image(j).to_string() << "\n";
  }
  return out.str();
}

TruncOperator commutator(const TruncOperator &a, const TruncOperator &b) { return a * b - b * a; }

// ---------------------------------------------------------------------------

OperatorSeries operator_log(const TruncOperator &T, std::optional<int> truncate_terms) {
  const Ring ring = T.ring();
  const TruncOperator N = minus_identity(T);
  OperatorSeries out{TruncOperator(ring, T.basis()), 0, true};
  TruncOperator power = N;

  if (ring.is_rational()) {
    const int limit = T.dim();
    std::optional<TruncOperator> snapshot;
    for (int i = 1;; ++i) {
      if (power.is_zero()) {
        out.terms = i - 1;
        return out;
      }
      mpq_class c(i % 2 == 1 ? 1 : -1, i);
      out.value += Coeff::from_rational(ring, c) * power;
      if (truncate_terms && i == *truncate_terms)
        snapshot = out.value;
      if (i >= limit && (!truncate_terms || i >= *truncate_terms)) {
        if (!truncate_terms)
          throw NonTerminating("log: T - 1 is not nilpotent over Q");
        out.value = std::move(*snapshot);
        out.terms = *truncate_terms;
        out.exact = false;
        return out;
      }
      power = power * N;
    }
  }

  const int gain = N.min_filtration_order();
  require_gain(ring, gain, false);
  const int p = ring.prime();
  for (int i = 1;; ++i) {
    if (power.is_zero() || tail_negligible(ring, i, gain, [p](int n) { return floor_log(n, p); }))
      break;
    Coeff c = Coeff::from_int(ring, i % 2 == 1 ? 1 : -1);
    TruncOperator term(ring, T.basis());
    for (int j = 0; j < power.dim(); ++j) {
      TruncOperator::Column col;
      for (const auto &e : power.column(j))
        col.push_back({e.row, (c * e.value).div_exact(i)});
      term.set_column(j, std::move(col));
    }
    out.value += term;
    out.terms = i;
    power = power * N;
  }
  out.value = out.value.with_precision(ring.precision());
  return out;
}

namespace {

// sum_{n>=0} step^n(start) / n! where step is a linear map on operators.
template <class Step>
OperatorSeries exp_like(const TruncOperator &start, Step step, int gain, int nilpotency_limit,
                        std::optional<int> truncate_terms, const char *what) {
  const Ring ring = start.ring();
  OperatorSeries out{start, 0, true};
  TruncOperator term = start; // step^n(start) / n!

  if (ring.is_rational()) {
    std::optional<TruncOperator> snapshot;
    if (truncate_terms && *truncate_terms == 0)
      snapshot = out.value;
    for (int n = 1;; ++n) {
      term = Coeff::from_rational(ring, mpq_class(1, n)) * step(term);
      if (term.is_zero()) {
        out.terms = n - 1;
        return out;
      }
      out.value += term;
      if (truncate_terms && n == *truncate_terms)
        snapshot = out.value;
      if (n >= nilpotency_limit && (!truncate_terms || n >= *truncate_terms)) {
        if (!truncate_terms)
          throw NonTerminating(std::string(what) + ": series does not terminate over Q");
        out.value = std::move(*snapshot);
        out.terms = *truncate_terms;
        out.exact = false;
        return out;
      }
    }
  }

  require_gain(ring, gain, true);
  const int p = ring.prime();
  TruncOperator power = start; // step^n(start), undivided
  mpz_class factorial = 1;
  for (int n = 1;; ++n) {
    if (tail_negligible(ring, n, gain, [p](int k) { return (k - 1) / (p - 1); }))
      break;
    power = step(power);
    if (power.is_zero())
      break;
    factorial *= n;
    TruncOperator t(ring, start.basis());
    for (int j = 0; j < power.dim(); ++j) {
      TruncOperator::Column col;
      for (const auto &e : power.column(j))
        col.push_back({e.row, e.value.div_exact(factorial)});
      t.set_column(j, std::move(col));
    }
    out.value += t;
    out.terms = n;
  }
  out.value = out.value.with_precision(ring.precision());
  return out;
}

} // namespace

OperatorSeries operator_exp(const TruncOperator &W, std::optional<int> truncate_terms) {
  TruncOperator one = TruncOperator::identity(W.ring(), W.basis());
  return exp_like(
      one, [&W](const TruncOperator &x) { return W * x; }, W.min_filtration_order(), W.dim(), truncate_terms,
      "exp");
}

OperatorSeries operator_adjoint_exp(const TruncOperator &a, const TruncOperator &w, std::optional<int> truncate_terms) {
  return exp_like(
      w, [&a](const TruncOperator &x) { return x * a - a * x; }, a.min_filtration_order(), 2 * a.dim(),
      truncate_terms, "adjoint exp");
}

bool is_unipotent(const TruncOperator &T, int k) {
  if (k < 2)
    return true;
  TruncOperator block = k - 1 < T.degree_bound() ? T.restricted(k - 1) : T;
  TruncOperator N = minus_identity(block);
  const int m = block.dim();
  TruncOperator power = N;
  for (int i = 1; i < m && !power.is_zero(); ++i)
    power = power * N;
  return power.is_zero();
}

namespace {
bool series_vanish(const TruncSeries &s, int k) {
  if (k <= 0 || s.ring().is_rational())
    return s.is_zero();
  Coeff zero = Coeff::zero(s.ring());
  for (const auto &[m, c] : s.terms())
    if (!Coeff::agree_mod(c, zero, k))
      return false;
  return true;
}
} // namespace

std::optional<std::pair<int, int>> leibniz_violation(const TruncOperator &W, int factor_degree, int modulus_exponent) {
  const auto &basis = *W.basis();
  const int n = basis.count_up_to(factor_degree);
  const Ring ring = W.ring();
  const int d = basis.nvars(), D = basis.degree_bound();
  for (int i = 0; i < n; ++i) {
    TruncSeries f = TruncSeries::monomial(ring, d, D, basis[i], Coeff::one(ring));
    TruncSeries wf = W.image(i);
    for (int j = i; j < n; ++j) {
      if (basis[i].degree() + basis[j].degree() > D)
        continue;
      TruncSeries g = TruncSeries::monomial(ring, d, D, basis[j], Coeff::one(ring));
      TruncSeries lhs = W.image(basis.index_of(basis[i] * basis[j]));
      TruncSeries rhs = mul(wf, g) + mul(f, W.image(j));
      if (!series_vanish(lhs - rhs, modulus_exponent))
        return std::make_pair(i, j);
    }
  }
  return std::nullopt;
}

std::optional<std::pair<int, int>> multiplicativity_violation(const TruncOperator &T, int factor_degree,
                                                              int modulus_exponent) {
  const auto &basis = *T.basis();
  const int n = basis.count_up_to(factor_degree);
  const int D = basis.degree_bound();
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      if (basis[i].degree() + basis[j].degree() > D)
        continue;
      TruncSeries lhs = T.image(basis.index_of(basis[i] * basis[j]));
      TruncSeries rhs = mul(T.image(i), T.image(j));
      if (!series_vanish(lhs - rhs, modulus_exponent))
        return std::make_pair(i, j);
    }
  return std::nullopt;
}

} // namespace fglie
