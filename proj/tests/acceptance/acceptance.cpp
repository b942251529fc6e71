// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.  Each criterion also has a wall-clock budget.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>

#include "cli.hpp"
#include "fglie/json_io.hpp"
#include "fglie/sampling.hpp"
#include "fglie/verify.hpp"
#include "matrix_bch.hpp"

using namespace fglie;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;
};

Verdict fail(const std::string &why) { return {false, why}; }

// 1. Lyndon-basis BCH against log(e^X e^Y) for nilpotent matrices.
Verdict bch_matrix_oracle() {
  std::mt19937_64 rng(20240101);
  int agreed = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 3 + trial % 4;
    oracle::Mat X = oracle::random_strict_upper(n, rng), Y = oracle::random_strict_upper(n, rng);
    oracle::Mat expected = oracle::log_unipotent(oracle::exp_nilpotent(X) * oracle::exp_nilpotent(Y));
    // words of length >= n vanish on n x n strictly upper triangular matrices
    if (oracle::evaluate_at_matrices(bch_series(n - 1), X, Y) != expected)
      return fail("pair " + std::to_string(trial) + " (size " + std::to_string(n) + ") differs");
    ++agreed;
  }
  return {true, std::to_string(agreed) + "/100 pairs of sizes 3-6 agree exactly"};
}

// 2. v_p(c) >= -(n-1)/(p-1) for all coefficients up to degree 10.
Verdict valuation_audit() {
  const LieSeries &H = bch_series(10);
  int checked = 0;
  for (int p : kAuditPrimes) {
    BchAudit audit = audit_valuations(H, p);
    if (!audit.pass)
      return fail(std::to_string(audit.violations) + " violations at p = " + std::to_string(p));
    for (const auto &[w, c] : H.terms()) {
      if (oracle::valuation(c, p) * (p - 1) < -static_cast<int>(w.size() - 1))
        return fail("independent recheck fails for " + w + " at p = " + std::to_string(p));
      ++checked;
    }
  }
  return {true, std::to_string(H.terms().size()) + " coefficients x 4 primes, " + std::to_string(checked) +
                    " checks, 0 violations"};
}

// 3. Identity and associativity at D = 8.
Verdict law_axioms() {
  for (const char *name : {"additive", "additive:3", "multiplicative", "heisenberg", "unitriangular:4"}) {
    AxiomReport r = check_axioms(laws::by_name(name, Ring::rational(), 8));
    if (!r.pass())
      return fail(std::string(name) + ": " + r.failure);
  }
  return {true, "additive, additive:3, multiplicative, heisenberg, unitriangular:4 exact at D = 8"};
}

// 4. [psi(e_i), psi(e_j)] = psi(C(e_i, e_j)) and phi psi = id on A_{<=6}.
Verdict bracket_correspondence() {
  int pairs = 0;
  for (const char *name : {"heisenberg", "unitriangular:4"}) {
    FormalGroupLaw F = laws::by_name(name, Ring::rational(), 6);
    SuiteReport r = correspondence_suite(F, 6);
    for (const auto &c : r.checks) {
      if (!c.pass())
        return fail(std::string(name) + " " + c.name + ": " + c.first_failure);
      if (c.name == "bracket_correspondence")
        pairs += c.checked;
    }
  }
  return {true, std::to_string(pairs) + " ordered basis pairs, operators on A_{<=6}, exact"};
}

// 5. log(x y) = H(log x, log y) and exp log = id on G(bold_p R).
Verdict log_homomorphism() {
  std::ostringstream detail;
  struct Case {
    Ring ring;
    int prime;
  };
  for (const Case &c : {Case{Ring::rational(), 3}, Case{Ring::rational(), 2}, Case{Ring::padic(3, 8), 3},
                        Case{Ring::padic(2, 8), 2}}) {
    FormalGroupLaw F = laws::heisenberg(c.ring, 6);
    RingLieAlgebra L = lie_from_law(F);
    CorrespondenceOptions strict;
    strict.truncate_rational = false;
    auto same = [&](const Point &a, const Point &b) {
      return c.ring.is_rational() ? points_equal(a, b) : points_agree_mod(a, b, 8);
    };
    Rng rng(500 + static_cast<std::uint64_t>(c.prime));
    for (int t = 0; t < 50; ++t) {
      Point x = random_bold_p_point(c.ring, c.prime, 3, rng), y = random_bold_p_point(c.ring, c.prime, 3, rng);
      Point lx = group_log(F, x, strict).coordinates, ly = group_log(F, y, strict).coordinates;
      if (!same(group_log(F, F.multiply(x, y), strict).coordinates, bch_eval(L, lx, ly, 6)))
        return fail(c.ring.descriptor().to_string() + ": log(xy) != H(log x, log y) at " + point_to_string(x) + ", " +
                    point_to_string(y));
      if (!same(group_exp(F, lx, strict).coordinates, x))
        return fail(c.ring.descriptor().to_string() + ": exp(log x) != x at " + point_to_string(x));
    }
  }
  return {true, "50 pairs each: Q with bold_p = 3 and 4 (exact), Z_3 and Z_2 mod p^8"};
}

// 6. operator_log(rho_x) is a derivation on A_{<=5} x A_{<=5}, exp of it is rho_x.
Verdict operator_explog() {
  ExplogOptions opts;
  opts.trials = 50;
  opts.seed = 66;
  opts.leibniz_degree = 5;
  std::vector<std::string> parts;
  for (const FormalGroupLaw &F : {laws::heisenberg(Ring::rational(), 6), laws::multiplicative(Ring::padic(3, 8), 6)}) {
    SuiteReport r = operator_explog_suite(F, 3, opts);
    for (const auto &c : r.checks)
      if (!c.pass())
        return fail(F.name() + " " + c.name + ": " + c.first_failure);
    parts.push_back(F.name() + " (" + r.comparison() + ")");
  }
  return {true, "50 trials each, operators on A_{<=10}: " + parts[0] + ", " + parts[1]};
}

// 7. adjoint_action(x, psi(b)) = psi(e^{ad a} b).
Verdict adjoint_identity() {
  SuiteReport r = adjoint_suite(laws::heisenberg(Ring::rational(), 6), 3, 20, 77);
  for (const auto &c : r.checks)
    if (!c.pass())
      return fail(c.name + ": " + c.first_failure);
  return {true, "20 points x 3 basis vectors, heisenberg over Q, exact"};
}

QVector unit(int d, int i) {
  QVector v(static_cast<size_t>(d), 0);
  v[static_cast<size_t>(i)] = 1;
  return v;
}

// 8. Radical classification.
Verdict radical_analysis() {
  RadicalReport sl2 = radical_nilpotency_report(algebras::sl2());
  if (sl2.radical.dim() != 0)
    return fail("sl2 radical has dimension " + std::to_string(sl2.radical.dim()));
  RadicalReport heis = radical_nilpotency_report(algebras::heisenberg());
  if (heis.verdict != RadicalVerdict::Pass)
    return fail("heisenberg is not PASS");
  RadicalReport sol = radical_nilpotency_report(algebras::solvable2());
  if (sol.verdict != RadicalVerdict::Flag)
    return fail("[x,y] = y is not FLAG");
  RadicalReport sum = radical_nilpotency_report(algebras::direct_sum(algebras::sl2(), algebras::heisenberg()));
  if (sum.verdict != RadicalVerdict::Pass)
    return fail("sl2 + heisenberg is not PASS");
  if (sum.radical != Subspace::span(6, {unit(6, 3), unit(6, 4), unit(6, 5)}))
    return fail("sl2 + heisenberg radical is not the heisenberg summand");
  return {true, "sl2 -> 0, heisenberg PASS, [x,y]=y FLAG, sl2+heisenberg PASS with radical = heisenberg"};
}

// 9. Identical argv and seed give byte-identical JSON.
Verdict determinism() {
  const std::vector<std::vector<std::string>> commands{
      {"law", "explog-verify", "--law", "heisenberg", "--prime", "3", "--trials", "20", "--seed", "42"},
      {"law", "explog-verify", "--law", "unitriangular:3", "--prime", "2", "--precision", "8", "--trials", "5"},
      {"law", "adjoint-verify", "--law", "heisenberg", "--trials", "5", "--seed", "3"},
      {"law", "unipotent", "--law", "unitriangular:4", "--trials", "5", "--k", "4"},
      {"law", "check", "--law", "unitriangular:4"},
      {"law", "lie", "--law", "heisenberg"},
      {"bch", "audit", "--degree", "8"},
      {"lie", "report", "--structure", "sl2+heisenberg"}};
  for (auto args : commands) {
    args.push_back("--format");
    args.push_back("json");
    std::ostringstream out1, out2, err;
    int c1 = cli::run(args, out1, err), c2 = cli::run(args, out2, err);
    if (c1 != c2 || out1.str() != out2.str())
      return fail(args[0] + " " + args[1] + " output differs between runs");
    if (c1 != cli::kOk)
      return fail(args[0] + " " + args[1] + " exited with " + std::to_string(c1) + ": " + err.str());
    Json j = Json::parse(out1.str());
    if (!j.contains("tool_version") || j["basis_convention"] != "lyndon" || !j.contains("ring"))
      return fail(args[0] + " " + args[1] + " lacks report metadata");
  }
  return {true, std::to_string(commands.size()) + " verification commands, byte-identical JSON"};
}

struct Criterion {
  int number;
  const char *title;
  double budget_seconds;
  std::function<Verdict()> run;
};

} // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "BCH vs matrix log(e^X e^Y)", 30, bch_matrix_oracle},
      {2, "BCH valuation bound to degree 10", 60, valuation_audit},
      {3, "group-law axioms at D = 8", 10, law_axioms},
      {4, "[psi(e_i), psi(e_j)] = psi(C(e_i, e_j)), phi psi = id", 30, bracket_correspondence},
      {5, "log(xy) = H(log x, log y), exp log = id", 60, log_homomorphism},
      {6, "operator log is a derivation, exp(log rho_x) = rho_x", 60, operator_explog},
      {7, "adjoint action = psi(e^{ad a} b)", 30, adjoint_identity},
      {8, "solvable radical classification", 5, radical_analysis},
      {9, "deterministic JSON reports", 60, determinism},
  };
  int failures = 0;
  for (const Criterion &c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception &e) {
      v = fail(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (v.pass && seconds > c.budget_seconds)
      v = fail("over the " + std::to_string(static_cast<int>(c.budget_seconds)) + " s budget");
    if (!v.pass)
      ++failures;
    std::printf("criterion %d: %s  %s -- %s (%.2f s)\n", c.number, v.pass ? "PASS" : "FAIL", c.title, v.detail.c_str(),
                seconds);
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures ? 1 : 0;
}
