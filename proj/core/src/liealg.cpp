#include "fglie/liealg.hpp"

#include <stdexcept>

#include "fglie/freelie.hpp"

namespace fglie {

StructureConstants::StructureConstants(int dimension)
    : d_(dimension), c_(static_cast<size_t>(dimension * dimension * dimension)) {
  if (dimension < 1)
    throw std::invalid_argument("Lie algebra dimension must be >= 1");
}

void StructureConstants::set_bracket(int i, int j, const QVector &result) {
  if (i < 0 || j < 0 || i >= d_ || j >= d_)
    throw std::out_of_range("basis index out of range");
  if (static_cast<int>(result.size()) != d_)
    throw std::invalid_argument("bracket result has the wrong length");
  if (i == j) {
    if (!is_zero(result))
      throw std::invalid_argument("[e_i, e_i] must vanish");
    return;
  }
  for (int k = 0; k < d_; ++k) {
    c_[index(i, j, k)] = result[static_cast<size_t>(k)];
    c_[index(j, i, k)] = -result[static_cast<size_t>(k)];
  }
}

QVector StructureConstants::bracket_of_basis(int i, int j) const {
  QVector r(static_cast<size_t>(d_));
  for (int k = 0; k < d_; ++k)
    r[static_cast<size_t>(k)] = c_[index(i, j, k)];
  return r;
}

QVector StructureConstants::bracket(const QVector &a, const QVector &b) const {
  if (static_cast<int>(a.size()) != d_ || static_cast<int>(b.size()) != d_)
    throw std::invalid_argument("bracket: vector length mismatch");
  QVector r(static_cast<size_t>(d_));
  for (int i = 0; i < d_; ++i) {
    if (a[static_cast<size_t>(i)] == 0)
      continue;
    for (int j = 0; j < d_; ++j) {
      if (i == j || b[static_cast<size_t>(j)] == 0)
        continue;
      mpq_class f = a[static_cast<size_t>(i)] * b[static_cast<size_t>(j)];
      for (int k = 0; k < d_; ++k)
        if (c_[index(i, j, k)] != 0)
          r[static_cast<size_t>(k)] += f * c_[index(i, j, k)];
    }
  }
  return r;
}

QMatrix StructureConstants::ad(const QVector &x) const {
  QMatrix m(d_, d_);
  for (int j = 0; j < d_; ++j) {
    QVector ej(static_cast<size_t>(d_));
    ej[static_cast<size_t>(j)] = 1;
    QVector col = bracket(x, ej);
    for (int k = 0; k < d_; ++k)
      m(k, j) = col[static_cast<size_t>(k)];
  }
  return m;
}

QMatrix StructureConstants::ad_basis(int i) const {
  QMatrix m(d_, d_);
  for (int j = 0; j < d_; ++j)
    for (int k = 0; k < d_; ++k)
      m(k, j) = c_[index(i, j, k)];
  return m;
}

bool StructureConstants::is_abelian() const {
  for (const auto &x : c_)
    if (x != 0)
      return false;
  return true;
}

JacobiReport check_jacobi(const StructureConstants &L) {
  const int d = L.dimension();
  auto basis = [d](int i) {
    QVector v(static_cast<size_t>(d));
    v[static_cast<size_t>(i)] = 1;
    return v;
  };
  JacobiReport report;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int l = 0; l < d; ++l) {
        QVector a = basis(i), b = basis(j), c = basis(l);
        QVector s = L.bracket(a, L.bracket(b, c));
        QVector t = L.bracket(b, L.bracket(c, a));
        QVector u = L.bracket(c, L.bracket(a, b));
        for (int k = 0; k < d; ++k)
          s[static_cast<size_t>(k)] += t[static_cast<size_t>(k)] + u[static_cast<size_t>(k)];
        if (!is_zero(s)) {
          report.pass = false;
          report.witness = std::array<int, 3>{i, j, l};
          report.residual = s;
          return report;
        }
      }
  return report;
}

QMatrix killing_form(const StructureConstants &L) {
  const int d = L.dimension();
  std::vector<QMatrix> ads;
  for (int i = 0; i < d; ++i)
    ads.push_back(L.ad_basis(i));
  QMatrix k(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j) {
      k(i, j) = (ads[static_cast<size_t>(i)] * ads[static_cast<size_t>(j)]).trace();
      k(j, i) = k(i, j);
    }
  return k;
}

Subspace bracket_span(const StructureConstants &L, const Subspace &A, const Subspace &B) {
  std::vector<QVector> vs;
  for (const auto &a : A.basis())
    for (const auto &b : B.basis()) {
      QVector v = L.bracket(a, b);
      if (!is_zero(v))
        vs.push_back(std::move(v));
    }
  return Subspace::span(L.dimension(), vs);
}

std::vector<int> derived_series(const StructureConstants &L, const Subspace &S) {
  std::vector<int> dims{S.dim()};
  Subspace cur = S;
  while (cur.dim() > 0) {
    Subspace next = bracket_span(L, cur, cur);
    dims.push_back(next.dim());
    if (next.dim() == cur.dim())
      break;
    cur = std::move(next);
  }
  return dims;
}

std::vector<int> lower_central_series(const StructureConstants &L, const Subspace &S) {
  std::vector<int> dims{S.dim()};
  Subspace cur = S;
  while (cur.dim() > 0) {
    Subspace next = bracket_span(L, S, cur);
    dims.push_back(next.dim());
    if (next.dim() == cur.dim())
      break;
    cur = std::move(next);
  }
  return dims;
}

std::vector<int> lower_central_series(const StructureConstants &L) {
  return lower_central_series(L, Subspace::whole(L.dimension()));
}

bool is_nilpotent(const StructureConstants &L, const Subspace &S) { return lower_central_series(L, S).back() == 0; }
bool is_nilpotent(const StructureConstants &L) { return is_nilpotent(L, Subspace::whole(L.dimension())); }
bool is_solvable(const StructureConstants &L, const Subspace &S) { return derived_series(L, S).back() == 0; }

std::optional<int> nilpotency_class(const StructureConstants &L) {
  auto dims = lower_central_series(L);
  if (dims.back() != 0)
    return std::nullopt;
  return static_cast<int>(dims.size()) - 1;
}

Subspace solvable_radical(const StructureConstants &L) {
  const int d = L.dimension();
  Subspace whole = Subspace::whole(d);
  Subspace derived = bracket_span(L, whole, whole);
  QMatrix kappa = killing_form(L);
  // x is in the radical iff kappa(x, u) = 0 for every u in [L, L]
  std::vector<QVector> rows;
  for (const auto &u : derived.basis())
    rows.push_back(kappa.apply(u));
  Subspace radical = rows.empty() ? whole : Subspace::span(d, nullspace(QMatrix::from_rows(rows, d)));
  if (!is_solvable(L, radical))
    throw std::logic_error("Killing-orthogonal complement of [L,L] is not solvable");
  return radical;
}

RadicalReport radical_nilpotency_report(const StructureConstants &L) {
  RadicalReport r;
  r.radical = solvable_radical(L);
  r.radical_derived_series = derived_series(L, r.radical);
  r.radical_lower_central_series = lower_central_series(L, r.radical);
  r.radical_nilpotent = r.radical_lower_central_series.back() == 0;
  r.verdict = r.radical_nilpotent ? RadicalVerdict::Pass : RadicalVerdict::Flag;
  return r;
}

namespace algebras {

namespace {
QVector unit(int d, int k, const mpq_class &c = 1) {
  QVector v(static_cast<size_t>(d));
  v[static_cast<size_t>(k)] = c;
  return v;
}
} // namespace

StructureConstants abelian(int d) { return StructureConstants(d); }

StructureConstants heisenberg() {
  StructureConstants L(3);
  L.set_bracket(0, 1, unit(3, 2));
  return L;
}

StructureConstants sl2() {
  StructureConstants L(3);
  L.set_bracket(0, 1, unit(3, 1, 2));
  L.set_bracket(0, 2, unit(3, 2, -2));
  L.set_bracket(1, 2, unit(3, 0));
  return L;
}

StructureConstants solvable2() {
  StructureConstants L(2);
  L.set_bracket(0, 1, unit(2, 1));
  return L;
}

StructureConstants direct_sum(const StructureConstants &a, const StructureConstants &b) {
  const int da = a.dimension(), db = b.dimension(), d = da + db;
  StructureConstants L(d);
  for (int i = 0; i < da; ++i)
    for (int j = i + 1; j < da; ++j) {
      QVector r(static_cast<size_t>(d));
      for (int k = 0; k < da; ++k)
        r[static_cast<size_t>(k)] = a(i, j, k);
      L.set_bracket(i, j, r);
    }
  for (int i = 0; i < db; ++i)
    for (int j = i + 1; j < db; ++j) {
      QVector r(static_cast<size_t>(d));
      for (int k = 0; k < db; ++k)
        r[static_cast<size_t>(da + k)] = b(i, j, k);
      L.set_bracket(da + i, da + j, r);
    }
  return L;
}

StructureConstants free_nilpotent(int k, int c) {
  std::vector<Word> words = lyndon_words(k, c);
  const int d = static_cast<int>(words.size());
  std::map<Word, int> position;
  for (int i = 0; i < d; ++i)
    position[words[static_cast<size_t>(i)]] = i;
  StructureConstants L(d);
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      const Word &u = words[static_cast<size_t>(i)];
      const Word &v = words[static_cast<size_t>(j)];
      if (static_cast<int>(u.size() + v.size()) > c)
        continue;
      LieSeries a(k, c), b(k, c);
      a.add_term(u, 1);
      b.add_term(v, 1);
      LieSeries br = lie_bracket(a, b);
      QVector r(static_cast<size_t>(d));
      for (const auto &[w, coeff] : br.terms())
        r[static_cast<size_t>(position.at(w))] = coeff;
      L.set_bracket(i, j, r);
    }
  return L;
}

StructureConstants by_name(const std::string &name) {
  auto plus = name.find('+');
  if (plus != std::string::npos)
    return direct_sum(by_name(name.substr(0, plus)), by_name(name.substr(plus + 1)));
  if (name == "sl2")
    return sl2();
  if (name == "heisenberg")
    return heisenberg();
  if (name == "solvable2")
    return solvable2();
  if (name.rfind("abelian:", 0) == 0)
    return abelian(std::stoi(name.substr(8)));
  if (name.rfind("free_nilpotent:", 0) == 0) {
    std::string rest = name.substr(15);
    auto colon = rest.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("free_nilpotent needs k:c");
    return free_nilpotent(std::stoi(rest.substr(0, colon)), std::stoi(rest.substr(colon + 1)));
  }
  throw std::invalid_argument("unknown Lie algebra '" + name + "'");
}

} // namespace algebras

} // namespace fglie
