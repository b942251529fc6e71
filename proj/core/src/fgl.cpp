#include "fglie/fgl.hpp"

#include <algorithm>
#include <stdexcept>

namespace fglie {

namespace {

TruncSeries var(Ring ring, int n, int D, int i) { return TruncSeries::variable(ring, n, D, i); }

// Entries of an exact linear solve J delta = r, pivoting on units.
Point solve_unit_pivot(std::vector<Point> J, Point r) {
  const int d = static_cast<int>(r.size());
  for (int c = 0; c < d; ++c) {
    int pivot = -1;
    for (int i = c; i < d; ++i) {
      const Coeff &v = J[static_cast<size_t>(i)][static_cast<size_t>(c)];
      if (!v.is_zero() && (v.ring().is_rational() || !v.in_maximal_ideal())) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0)
      throw std::runtime_error("inverse: Jacobian is not invertible over the ring");
    std::swap(J[static_cast<size_t>(c)], J[static_cast<size_t>(pivot)]);
    std::swap(r[static_cast<size_t>(c)], r[static_cast<size_t>(pivot)]);
    Coeff inv = J[static_cast<size_t>(c)][static_cast<size_t>(c)].inverse();
    for (int j = c; j < d; ++j)
      J[static_cast<size_t>(c)][static_cast<size_t>(j)] *= inv;
    r[static_cast<size_t>(c)] *= inv;
    for (int i = 0; i < d; ++i) {
      if (i == c)
        continue;
      Coeff f = J[static_cast<size_t>(i)][static_cast<size_t>(c)];
      if (f.is_zero())
        continue;
      for (int j = c; j < d; ++j)
        J[static_cast<size_t>(i)][static_cast<size_t>(j)] -= f * J[static_cast<size_t>(c)][static_cast<size_t>(j)];
      r[static_cast<size_t>(i)] -= f * r[static_cast<size_t>(c)];
    }
  }
  return r;
}

int resolve_op_degree(const FormalGroupLaw &F, int requested) {
  return requested > 0 ? requested : default_operator_degree(F);
}

void require_bold_p(const FormalGroupLaw &F, const Point &x, const char *what) {
  F.require_point(x);
  if (!in_bold_p_group(F.ring(), x))
    throw std::invalid_argument(std::string(what) + ": coordinates must have valuation >= " +
                                std::to_string(F.ring().descriptor().bold_p_valuation()));
}

} // namespace

FormalGroupLaw::FormalGroupLaw(std::string name, std::vector<TruncSeries> components)
    : name_(std::move(name)), components_(std::move(components)) {
  if (components_.empty())
    throw std::invalid_argument("formal group law needs at least one component");
  const int d = dimension();
  for (const auto &c : components_) {
    if (c.nvars() != 2 * d)
      throw std::invalid_argument("law components must be series in 2d = " + std::to_string(2 * d) + " variables");
    if (!(c.ring() == components_.front().ring()) || c.degree_bound() != components_.front().degree_bound())
      throw std::invalid_argument("law components differ in ring or degree bound");
  }
}

int FormalGroupLaw::polynomial_degree() const {
  int deg = 0;
  for (const auto &c : components_)
    for (const auto &[m, v] : c.terms())
      deg = std::max(deg, m.degree());
  return deg;
}

void FormalGroupLaw::require_point(const Point &x) const {
  if (static_cast<int>(x.size()) != dimension())
    throw std::invalid_argument("point has " + std::to_string(x.size()) + " coordinates, law dimension is " +
                                std::to_string(dimension()));
  for (const auto &c : x) {
    if (!(c.ring() == ring()))
      throw RingMismatch("point coordinates live in a different ring");
    if (!ring().is_rational() && !c.in_maximal_ideal())
      throw std::invalid_argument("point coordinate " + c.to_string() + " is not in the maximal ideal");
  }
}

Point FormalGroupLaw::multiply(const Point &x, const Point &y) const {
  require_point(x);
  require_point(y);
  Point xy = x;
  xy.insert(xy.end(), y.begin(), y.end());
  Point r;
  for (const auto &c : components_)
    r.push_back(eval_at_point(c, xy));
  return r;
}

Point FormalGroupLaw::inverse(const Point &x) const {
  require_point(x);
  const int d = dimension();
  std::vector<std::vector<TruncSeries>> jac(static_cast<size_t>(d));
  for (int k = 0; k < d; ++k)
    for (int j = 0; j < d; ++j)
      jac[static_cast<size_t>(k)].push_back(partial(components_[static_cast<size_t>(k)], d + j));
  Point z;
  for (const auto &c : x)
    z.push_back(-c);
  for (int iter = 0; iter < 64; ++iter) {
    Point xz = x;
    xz.insert(xz.end(), z.begin(), z.end());
    Point r;
    for (const auto &c : components_)
      r.push_back(eval_at_point(c, xz));
    if (is_zero_point(r))
      return z;
    std::vector<Point> J(static_cast<size_t>(d));
    for (int k = 0; k < d; ++k)
      for (int j = 0; j < d; ++j)
        J[static_cast<size_t>(k)].push_back(eval_at_point(jac[static_cast<size_t>(k)][static_cast<size_t>(j)], xz));
    Point delta = solve_unit_pivot(std::move(J), std::move(r));
    for (int k = 0; k < d; ++k)
      z[static_cast<size_t>(k)] -= delta[static_cast<size_t>(k)];
  }
  throw std::runtime_error("inverse: Newton iteration did not converge");
}

// ---------------------------------------------------------------------------

namespace laws {

FormalGroupLaw additive(int d, Ring ring, int D) {
  if (d < 1)
    throw std::invalid_argument("additive law needs d >= 1");
  std::vector<TruncSeries> comps;
  for (int k = 0; k < d; ++k)
    comps.push_back(var(ring, 2 * d, D, k) + var(ring, 2 * d, D, d + k));
  return FormalGroupLaw(d == 1 ? "additive" : "additive:" + std::to_string(d), std::move(comps));
}

FormalGroupLaw multiplicative(Ring ring, int D) {
  TruncSeries x = var(ring, 2, D, 0), y = var(ring, 2, D, 1);
  return FormalGroupLaw("multiplicative", {x + y + x * y});
}

FormalGroupLaw heisenberg(Ring ring, int D) {
  auto v = [&](int i) { return var(ring, 6, D, i); };
  return FormalGroupLaw("heisenberg", {v(0) + v(3), v(1) + v(4), v(2) + v(5) + v(0) * v(4)});
}

namespace {
std::vector<std::pair<int, int>> unitriangular_positions(int n) {
  std::vector<std::pair<int, int>> pos;
  for (int s = 1; s < n; ++s)
    for (int i = 0; i + s < n; ++i)
      pos.emplace_back(i, i + s);
  return pos;
}
} // namespace

FormalGroupLaw unitriangular(int n, Ring ring, int D) {
  if (n < 2 || n > 9)
    throw std::invalid_argument("unitriangular:n needs 2 <= n <= 9");
  auto pos = unitriangular_positions(n);
  const int d = static_cast<int>(pos.size());
  std::map<std::pair<int, int>, int> index;
  for (int k = 0; k < d; ++k)
    index[pos[static_cast<size_t>(k)]] = k;
  std::vector<TruncSeries> comps;
  for (int k = 0; k < d; ++k) {
    auto [i, j] = pos[static_cast<size_t>(k)];
    TruncSeries f = var(ring, 2 * d, D, k) + var(ring, 2 * d, D, d + k);
    for (int m = i + 1; m < j; ++m)
      f += var(ring, 2 * d, D, index.at({i, m})) * var(ring, 2 * d, D, d + index.at({m, j}));
    comps.push_back(std::move(f));
  }
  return FormalGroupLaw("unitriangular:" + std::to_string(n), std::move(comps));
}

FormalGroupLaw by_name(const std::string &name, Ring ring, int D) {
  if (name == "additive")
    return additive(1, ring, D);
  if (name.rfind("additive:", 0) == 0)
    return additive(std::stoi(name.substr(9)), ring, D);
  if (name == "multiplicative")
    return multiplicative(ring, D);
  if (name == "heisenberg")
    return heisenberg(ring, D);
  if (name.rfind("unitriangular:", 0) == 0)
    return unitriangular(std::stoi(name.substr(14)), ring, D);
  throw std::invalid_argument("unknown law '" + name + "'");
}

std::vector<std::string> coordinate_names(const std::string &name, int d) {
  std::vector<std::string> names;
  if (name.rfind("unitriangular:", 0) == 0) {
    for (auto [i, j] : unitriangular_positions(std::stoi(name.substr(14))))
      names.push_back("x" + std::to_string(i + 1) + std::to_string(j + 1));
    return names;
  }
  for (int k = 0; k < d; ++k)
    names.push_back("x" + std::to_string(k + 1));
  return names;
}

} // namespace laws

// ---------------------------------------------------------------------------

namespace {

// First monomial where two series differ, as text.
std::optional<std::string> first_difference(const TruncSeries &a, const TruncSeries &b) {
  TruncSeries diff = a - b;
  if (diff.is_zero())
    return std::nullopt;
  const auto &[m, c] = *diff.terms().begin();
  return m.to_string() + " (residual " + c.to_string() + ")";
}

} // namespace

AxiomReport check_axioms(const FormalGroupLaw &F) {
  const int d = F.dimension();
  const int D = F.degree_bound();
  const Ring ring = F.ring();
  AxiomReport report;
  auto fail = [&report](const std::string &what) {
    if (report.failure.empty())
      report.failure = what;
  };

  std::vector<TruncSeries> x_then_zero, zero_then_y;
  for (int i = 0; i < d; ++i) {
    x_then_zero.push_back(var(ring, d, D, i));
    zero_then_y.push_back(TruncSeries(ring, d, D));
  }
  for (int i = 0; i < d; ++i) {
    x_then_zero.push_back(TruncSeries(ring, d, D));
    zero_then_y.push_back(var(ring, d, D, i));
  }
  for (int k = 0; k < d; ++k) {
    TruncSeries xk = var(ring, d, D, k);
    if (auto diff = first_difference(substitute(F.component(k), x_then_zero), xk)) {
      report.right_identity = false;
      fail("F(x,0) = x fails in component " + std::to_string(k + 1) + " at " + *diff);
    }
    if (auto diff = first_difference(substitute(F.component(k), zero_then_y), xk)) {
      report.left_identity = false;
      fail("F(0,y) = y fails in component " + std::to_string(k + 1) + " at " + *diff);
    }
  }

  // F(F(x,y),z) = F(x,F(y,z)) in 3d variables
  const int n = 3 * d;
  std::vector<TruncSeries> xy, yz;
  for (int k = 0; k < d; ++k) {
    xy.push_back(F.component(k).embedded(n, 0));
    yz.push_back(F.component(k).embedded(n, d));
  }
  std::vector<TruncSeries> left_args = xy, right_args;
  for (int i = 0; i < d; ++i)
    left_args.push_back(var(ring, n, D, 2 * d + i));
  for (int i = 0; i < d; ++i)
    right_args.push_back(var(ring, n, D, i));
  right_args.insert(right_args.end(), yz.begin(), yz.end());
  for (int k = 0; k < d; ++k) {
    TruncSeries lhs = substitute(F.component(k), left_args);
    TruncSeries rhs = substitute(F.component(k), right_args);
    if (auto diff = first_difference(lhs, rhs)) {
      report.associativity = false;
      fail("associativity fails in component " + std::to_string(k + 1) + " at " + *diff);
    }
  }
  return report;
}

RingLieAlgebra lie_from_law(const FormalGroupLaw &F) {
  const int d = F.dimension();
  const Ring ring = F.ring();
  if (F.degree_bound() < 2)
    throw std::invalid_argument("lie_from_law: the law must be truncated at degree >= 2");
  RingLieAlgebra L(ring, d);
  std::vector<std::vector<std::vector<Coeff>>> B(
      static_cast<size_t>(d), std::vector<std::vector<Coeff>>(static_cast<size_t>(d), Point(static_cast<size_t>(d), Coeff::zero(ring))));
  for (int k = 0; k < d; ++k) {
    const TruncSeries quadratic = F.component(k).homogeneous_part(2);
    for (const auto &[m, c] : quadratic.terms()) {
      int xdeg = 0, ydeg = 0, xi = -1, yj = -1;
      for (int v = 0; v < 2 * d; ++v) {
        if (m[v] == 0)
          continue;
        if (v < d) {
          xdeg += m[v];
          xi = v;
        } else {
          ydeg += m[v];
          yj = v - d;
        }
      }
      if (xdeg != 1 || ydeg != 1)
        throw std::invalid_argument("lie_from_law: component " + std::to_string(k + 1) + " has a pure quadratic term " +
                                    m.to_string() + "; the law is not normalized");
      B[static_cast<size_t>(xi)][static_cast<size_t>(yj)][static_cast<size_t>(k)] = c;
    }
  }
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      for (int k = 0; k < d; ++k)
        L.set_constant(i, j, k, B[static_cast<size_t>(i)][static_cast<size_t>(j)][static_cast<size_t>(k)] -
                                    B[static_cast<size_t>(j)][static_cast<size_t>(i)][static_cast<size_t>(k)]);
  // Jacobi in the ring
  auto unit = [&](int i) {
    Point e = zero_point(ring, d);
    e[static_cast<size_t>(i)] = Coeff::one(ring);
    return e;
  };
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      for (int l = j + 1; l < d; ++l) {
        Point a = unit(i), b = unit(j), c = unit(l);
        Point s = L.bracket(a, L.bracket(b, c));
        Point t = L.bracket(b, L.bracket(c, a));
        Point u = L.bracket(c, L.bracket(a, b));
        for (int k = 0; k < d; ++k)
          s[static_cast<size_t>(k)] += t[static_cast<size_t>(k)] + u[static_cast<size_t>(k)];
        if (!is_zero_point(s))
          throw std::invalid_argument("lie_from_law: Jacobi identity fails for (e" + std::to_string(i + 1) + ", e" +
                                      std::to_string(j + 1) + ", e" + std::to_string(l + 1) + ")");
      }
  return L;
}

int default_operator_degree(const FormalGroupLaw &F) { return std::max(1, F.degree_bound() - 1); }

TruncOperator invariant_derivation(const FormalGroupLaw &F, const Point &a, int op_degree) {
  const int d = F.dimension();
  const Ring ring = F.ring();
  if (static_cast<int>(a.size()) != d)
    throw std::invalid_argument("invariant_derivation: coordinate vector has the wrong length");
  if (op_degree + 1 > F.degree_bound() && F.polynomial_degree() >= F.degree_bound())
    throw std::invalid_argument("invariant_derivation: law degree bound must exceed the operator degree");
  BasisPtr basis = MonomialBasis::get(d, op_degree);
  const Point zeros = zero_point(ring, d);
  // v_k(y) = sum_i a_i dF_k(y, x)/dx_i at x = 0
  std::vector<TruncSeries> v;
  for (int k = 0; k < d; ++k) {
    TruncSeries vk(ring, d, op_degree);
    for (int i = 0; i < d; ++i) {
      if (a[static_cast<size_t>(i)].is_zero())
        continue;
      TruncSeries g = specialize_tail(partial(F.component(k), d + i), d, zeros);
      for (const auto &[m, c] : g.terms())
        vk.add_term(m, c * a[static_cast<size_t>(i)]);
    }
    v.push_back(std::move(vk));
  }
  TruncOperator op(ring, basis);
  for (int j = 1; j < basis->size(); ++j) {
    const Monomial &m = (*basis)[j];
    TruncSeries col(ring, d, op_degree);
    for (int k = 0; k < d; ++k) {
      if (m[k] == 0 || v[static_cast<size_t>(k)].is_zero())
        continue;
      Monomial lower = m;
      lower.set(k, m[k] - 1);
      col += mul(TruncSeries::monomial(ring, d, op_degree, lower, Coeff::from_int(ring, m[k])), v[static_cast<size_t>(k)]);
    }
    op.set_column(j, col);
  }
  return op;
}

Point phi_of_derivation(const TruncOperator &w) {
  const auto &basis = *w.basis();
  Point r;
  for (int i = 0; i < basis.nvars(); ++i)
    r.push_back(w.entry(0, basis.variable_index(i)));
  return r;
}

TruncOperator translation(const FormalGroupLaw &F, const Point &x, Side side, int op_degree) {
  F.require_point(x);
  const int d = F.dimension();
  const Ring ring = F.ring();
  BasisPtr basis = MonomialBasis::get(d, op_degree);
  Point fixed = side == Side::Right ? x : F.inverse(x);
  std::vector<TruncSeries> args;
  for (int pass = 0; pass < 2; ++pass) {
    // Right: F(y, x), variables first.  Left: F(x^{-1}, y), constants first.
    bool variables = (pass == 0) == (side == Side::Right);
    for (int i = 0; i < d; ++i)
      args.push_back(variables ? var(ring, d, op_degree, i)
                               : TruncSeries::constant(ring, d, op_degree, fixed[static_cast<size_t>(i)]));
  }
  std::vector<TruncSeries> images;
  for (const auto &c : F.components())
    images.push_back(compose_polynomial(c, args));
  return TruncOperator::substitution(ring, basis, images);
}

TruncOperator conjugation_operator(const FormalGroupLaw &F, const Point &x, int k) {
  F.require_point(x);
  if (k < 2)
    throw std::invalid_argument("conjugation_operator: need k >= 2");
  const int d = F.dimension();
  const Ring ring = F.ring();
  const int D = k - 1;
  Point xinv = F.inverse(x);
  std::vector<TruncSeries> inner_args;
  for (int i = 0; i < d; ++i)
    inner_args.push_back(TruncSeries::constant(ring, d, D, xinv[static_cast<size_t>(i)]));
  for (int i = 0; i < d; ++i)
    inner_args.push_back(var(ring, d, D, i));
  std::vector<TruncSeries> outer_args;
  for (const auto &c : F.components())
    outer_args.push_back(compose_polynomial(c, inner_args));
  for (int i = 0; i < d; ++i)
    outer_args.push_back(TruncSeries::constant(ring, d, D, x[static_cast<size_t>(i)]));
  std::vector<TruncSeries> images;
  for (const auto &c : F.components())
    images.push_back(compose_polynomial(c, outer_args));
  return TruncOperator::substitution(ring, MonomialBasis::get(d, D), images);
}

bool in_bold_p_group(Ring ring, const Point &x) {
  if (ring.is_rational())
    return true;
  const int need = ring.descriptor().bold_p_valuation();
  for (const auto &c : x)
    if (c.min_valuation() < need)
      return false;
  return true;
}

CorrespondenceResult group_log(const FormalGroupLaw &F, const Point &x, const CorrespondenceOptions &opts) {
  require_bold_p(F, x, "group_log");
  const int k = resolve_op_degree(F, opts.op_degree);
  TruncOperator rho = translation(F, x, Side::Right, k);
  std::optional<int> cut;
  if (opts.truncate_rational)
    cut = F.degree_bound();
  OperatorSeries log = operator_log(rho, cut);
  return {phi_of_derivation(log.value), log.exact, log.terms};
}

CorrespondenceResult group_exp(const FormalGroupLaw &F, const Point &a, const CorrespondenceOptions &opts) {
  require_bold_p(F, a, "group_exp");
  const int k = resolve_op_degree(F, opts.op_degree);
  TruncOperator w = invariant_derivation(F, a, k);
  std::optional<int> cut;
  if (opts.truncate_rational)
    cut = F.degree_bound();
  OperatorSeries e = operator_exp(w, cut);
  const auto &basis = *e.value.basis();
  Point x;
  for (int i = 0; i < F.dimension(); ++i)
    x.push_back(e.value.entry(0, basis.variable_index(i)));
  return {x, e.exact, e.terms};
}

TruncOperator adjoint_action(const FormalGroupLaw &F, const Point &x, const TruncOperator &w) {
  const int k = w.degree_bound();
  TruncOperator rho = translation(F, x, Side::Right, k);
  TruncOperator rho_inv = translation(F, F.inverse(x), Side::Right, k);
  return rho_inv * w * rho;
}

Point adjoint_coordinates(const RingLieAlgebra &L, const Point &a, const Point &b, std::optional<int> truncate_terms) {
  const Ring ring = L.ring();
  const int d = L.dimension();
  Point sum = b;
  Point term = b; // ad_a^n(b) / n!
  if (ring.is_rational()) {
    for (int n = 1;; ++n) {
      term = L.bracket(term, a);
      for (auto &c : term)
        c = c.scaled(mpq_class(1, n));
      if (is_zero_point(term))
        return sum;
      if (truncate_terms && n > *truncate_terms)
        return sum;
      if (n > d && !truncate_terms)
        throw NonTerminating("e^{ad a}: ad a is not nilpotent over Q");
      for (int i = 0; i < d; ++i)
        sum[static_cast<size_t>(i)] += term[static_cast<size_t>(i)];
    }
  }
  const int m = point_min_valuation(a);
  const int p = ring.prime();
  if (m < 1 || (p == 2 && m < 2))
    throw NonTerminating("e^{ad a}: a is not in bold_p L");
  Point power = b;
  mpz_class factorial = 1;
  for (int n = 1;; ++n) {
    long bound = static_cast<long>(n) * m - (n - 1) / (p - 1);
    if (bound >= ring.precision())
      break;
    power = L.bracket(power, a);
    if (is_zero_point(power))
      break;
    factorial *= n;
    for (int i = 0; i < d; ++i)
      sum[static_cast<size_t>(i)] += power[static_cast<size_t>(i)].div_exact(factorial);
  }
  for (auto &c : sum)
    c = c.with_precision(ring.precision());
  return sum;
}

} // namespace fglie
