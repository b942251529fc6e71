#include "fglie/verify.hpp"

#include "fglie/sampling.hpp"

namespace fglie {

bool SuiteReport::pass() const {
  for (const auto &c : checks)
    if (!c.pass())
      return false;
  return true;
}

std::string SuiteReport::comparison() const {
  if (ring.kind == RingKind::Rational)
    return "exact";
  const int k = modulus_exponent > 0 ? modulus_exponent : ring.precision;
  return "mod " + std::to_string(ring.prime) + "^" + std::to_string(k);
}

namespace {

class Checks {
public:
  explicit Checks(Ring ring) : ring_(ring) {}

  CheckOutcome &get(const std::string &name) {
    for (auto &c : list_)
      if (c.name == name)
        return c;
    list_.push_back({name, 0, 0, {}});
    return list_.back();
  }

  void record(const std::string &name, bool ok, const std::string &detail) {
    CheckOutcome &c = get(name);
    ++c.checked;
    if (!ok) {
      ++c.failed;
      if (c.first_failure.empty())
        c.first_failure = detail;
    }
  }

  bool same(const Point &a, const Point &b) const {
    return ring_.is_rational() ? points_equal(a, b) : points_agree_mod(a, b, ring_.precision());
  }
  bool same(const TruncOperator &a, const TruncOperator &b) const {
    return ring_.is_rational() ? a == b : TruncOperator::agree_mod(a, b, ring_.precision());
  }
  int modulus() const { return ring_.is_rational() ? 0 : ring_.precision(); }

  std::vector<CheckOutcome> take() { return std::move(list_); }

private:
  Ring ring_;
  std::vector<CheckOutcome> list_;
};

SuiteReport make_report(const std::string &suite, const FormalGroupLaw &F, int prime, int trials, std::uint64_t seed) {
  SuiteReport r;
  r.suite = suite;
  r.law = F.name();
  r.ring = F.ring().descriptor();
  r.prime = prime;
  r.trials = trials;
  r.seed = seed;
  return r;
}

Point unit_point(Ring ring, int d, int i) {
  Point e = zero_point(ring, d);
  e[static_cast<size_t>(i)] = Coeff::one(ring);
  return e;
}

std::string trial_label(int t, const Point &x) { return "trial " + std::to_string(t) + ", x = " + point_to_string(x); }

void operator_explog_trial(const FormalGroupLaw &F, const Point &x, int degree, Checks &checks, const std::string &label) {
  TruncOperator rho = translation(F, x, Side::Right, 2 * degree);
  OperatorSeries log = operator_log(rho);
  auto bad = leibniz_violation(log.value, degree, checks.modulus());
  std::string where;
  if (bad) {
    const auto &basis = *log.value.basis();
    where = label + ", f = " + basis[bad->first].to_string() + ", g = " + basis[bad->second].to_string();
  }
  checks.record("operator_log_leibniz", !bad, where);
  OperatorSeries exp = operator_exp(log.value);
  checks.record("operator_exp_log_identity", checks.same(exp.value, rho), label);
  auto bad_mul = multiplicativity_violation(exp.value, degree, checks.modulus());
  checks.record("operator_exp_multiplicative", !bad_mul, label);
}

} // namespace

SuiteReport operator_explog_suite(const FormalGroupLaw &F, int prime, const ExplogOptions &opts) {
  SuiteReport report = make_report("operator-explog", F, prime, opts.trials, opts.seed);
  const Ring ring = F.ring();
  Checks checks(ring);
  Rng rng(opts.seed);
  for (int t = 0; t < opts.trials; ++t) {
    Point x = random_bold_p_point(ring, prime, F.dimension(), rng);
    operator_explog_trial(F, x, opts.leibniz_degree, checks, trial_label(t, x));
  }
  report.checks = checks.take();
  return report;
}

SuiteReport explog_suite(const FormalGroupLaw &F, int prime, const ExplogOptions &opts) {
  SuiteReport report = make_report("explog", F, prime, opts.trials, opts.seed);
  const Ring ring = F.ring();
  const int d = F.dimension();
  Checks checks(ring);
  RingLieAlgebra L = lie_from_law(F);
  const int bch_degree = default_bch_degree(L, std::max(2, F.degree_bound()));
  CorrespondenceOptions strict;
  strict.truncate_rational = false;
  const int op = default_operator_degree(F);
  Rng rng(opts.seed);
  for (int t = 0; t < opts.trials; ++t) {
    Point x = random_bold_p_point(ring, prime, d, rng);
    Point y = random_bold_p_point(ring, prime, d, rng);
    Point a = random_bold_p_point(ring, prime, d, rng);
    const std::string label = trial_label(t, x);

    Point log_x = group_log(F, x, strict).coordinates;
    Point log_y = group_log(F, y, strict).coordinates;
    checks.record("log_in_bold_p_lattice", in_bold_p_group(ring, log_x), label);
    checks.record("exp_log_identity", checks.same(group_exp(F, log_x, strict).coordinates, x), label);
    checks.record("log_exp_identity", checks.same(group_log(F, group_exp(F, a, strict).coordinates, strict).coordinates, a),
                  "trial " + std::to_string(t) + ", a = " + point_to_string(a));
    Point log_xy = group_log(F, F.multiply(x, y), strict).coordinates;
    checks.record("log_homomorphism_bch", checks.same(log_xy, bch_eval(L, log_x, log_y, bch_degree)),
                  label + ", y = " + point_to_string(y));

    operator_explog_trial(F, x, opts.leibniz_degree, checks, label);

    if (opts.operator_checks) {
      TruncOperator rho_x = translation(F, x, Side::Right, op);
      TruncOperator rho_y = translation(F, y, Side::Right, op);
      TruncOperator lam_x = translation(F, x, Side::Left, op);
      TruncOperator lam_y = translation(F, y, Side::Left, op);
      Point xy = F.multiply(x, y);
      checks.record("right_action", checks.same(translation(F, xy, Side::Right, op), rho_x * rho_y), label);
      checks.record("left_action", checks.same(translation(F, xy, Side::Left, op), lam_x * lam_y), label);
      checks.record("left_right_commute", checks.same(lam_x * rho_y, rho_y * lam_x), label);
      TruncOperator psi_a = invariant_derivation(F, a, op);
      checks.record("left_invariance", checks.same(psi_a * lam_x, lam_x * psi_a), label);
      checks.record("phi_psi_identity", checks.same(phi_of_derivation(psi_a), a), label);
    }
  }
  report.checks = checks.take();
  return report;
}

SuiteReport adjoint_suite(const FormalGroupLaw &F, int prime, int trials, std::uint64_t seed) {
  SuiteReport report = make_report("adjoint", F, prime, trials, seed);
  const Ring ring = F.ring();
  const int d = F.dimension();
  Checks checks(ring);
  RingLieAlgebra L = lie_from_law(F);
  CorrespondenceOptions strict;
  strict.truncate_rational = false;
  const int op = default_operator_degree(F);
  std::vector<TruncOperator> psi;
  for (int i = 0; i < d; ++i)
    psi.push_back(invariant_derivation(F, unit_point(ring, d, i), op));
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    Point x = random_bold_p_point(ring, prime, d, rng);
    const std::string label = trial_label(t, x);
    Point a = group_log(F, x, strict).coordinates;
    TruncOperator log_rho = operator_log(translation(F, x, Side::Right, op)).value;
    for (int b = 0; b < d; ++b) {
      TruncOperator tau = adjoint_action(F, x, psi[static_cast<size_t>(b)]);
      Point coords = adjoint_coordinates(L, a, unit_point(ring, d, b));
      const std::string where = label + ", b = e" + std::to_string(b + 1);
      checks.record("adjoint_coordinates", checks.same(tau, invariant_derivation(F, coords, op)), where);
      checks.record("adjoint_operator_series",
                    checks.same(tau, operator_adjoint_exp(log_rho, psi[static_cast<size_t>(b)]).value), where);
    }
  }
  report.checks = checks.take();
  return report;
}

SuiteReport correspondence_suite(const FormalGroupLaw &F, int op_degree) {
  SuiteReport report = make_report("correspondence", F, 0, 0, 0);
  const Ring ring = F.ring();
  const int d = F.dimension();
  Checks checks(ring);
  RingLieAlgebra L = lie_from_law(F);
  std::vector<TruncOperator> psi;
  std::vector<Point> e;
  for (int i = 0; i < d; ++i) {
    e.push_back(unit_point(ring, d, i));
    psi.push_back(invariant_derivation(F, e.back(), op_degree));
  }
  const auto &basis = *psi.front().basis();
  for (int i = 0; i < d; ++i) {
    const std::string label = "e" + std::to_string(i + 1);
    checks.record("phi_psi_identity", checks.same(phi_of_derivation(psi[static_cast<size_t>(i)]), e[static_cast<size_t>(i)]), label);
    checks.record("derivation_kills_constants", psi[static_cast<size_t>(i)].column(0).empty(), label);
    // pairing w_i(x_j)(e) = delta_ij
    for (int j = 0; j < d; ++j) {
      Coeff v = psi[static_cast<size_t>(i)].entry(0, basis.variable_index(j));
      bool ok = i == j ? v.is_one() : v.is_zero();
      checks.record("cotangent_pairing", ok, label + ", x" + std::to_string(j + 1));
    }
    for (int j = 0; j < d; ++j) {
      if (i == j)
        continue;
      TruncOperator lhs = commutator(psi[static_cast<size_t>(i)], psi[static_cast<size_t>(j)]);
      TruncOperator rhs = invariant_derivation(F, L.bracket(e[static_cast<size_t>(i)], e[static_cast<size_t>(j)]), op_degree);
      checks.record("bracket_correspondence", checks.same(lhs, rhs), label + ", e" + std::to_string(j + 1));
    }
  }
  report.checks = checks.take();
  return report;
}

SuiteReport unipotent_suite(const FormalGroupLaw &F, int prime, int trials, std::uint64_t seed, int k) {
  SuiteReport report = make_report("unipotent", F, prime, trials, seed);
  const Ring ring = F.ring();
  Checks checks(ring);
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    Point x = random_bold_p_point(ring, prime, F.dimension(), rng);
    TruncOperator T = conjugation_operator(F, x, k);
    checks.record("conjugation_unipotent", is_unipotent(T, k), trial_label(t, x));
    checks.record("conjugation_fixes_constants", T.column(0).size() == 1 && T.column(0)[0].value.is_one(), trial_label(t, x));
  }
  report.checks = checks.take();
  return report;
}

SuiteReport gamma_suite(const RingLieAlgebra &L, int prime, int trials, std::uint64_t seed, int N) {
  SuiteReport report;
  report.suite = "gamma";
  report.law = "structure-constants";
  report.ring = L.ring().descriptor();
  report.prime = prime;
  report.trials = trials;
  report.seed = seed;
  GammaCheckReport g = gamma_group_check(L, prime, trials, seed, N);
  if (!g.exact && g.modulus_exponent < L.ring().precision())
    report.modulus_exponent = g.modulus_exponent;
  report.checks.push_back({"identity", trials, g.identity_failures, g.identity_failures ? g.first_failure : ""});
  report.checks.push_back({"inverse", trials, g.inverse_failures, g.inverse_failures ? g.first_failure : ""});
  report.checks.push_back({"associativity", trials, g.associativity_failures, g.associativity_failures ? g.first_failure : ""});
  return report;
}

} // namespace fglie
