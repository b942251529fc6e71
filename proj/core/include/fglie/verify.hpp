#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fglie/fgl.hpp"

namespace fglie {

struct CheckOutcome {
  std::string name;
  int checked = 0;
  int failed = 0;
  std::string first_failure;
  bool pass() const { return failed == 0; }
};

/// Result of a verification suite.  Over Q identities are compared exactly,
/// over p-adic rings modulo p^N.
struct SuiteReport {
  std::string suite;
  std::string law;
  RingDescriptor ring;
  int prime = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  std::vector<CheckOutcome> checks;
  /// Comparison exponent when below the ring precision; 0 otherwise.
  int modulus_exponent = 0;
  bool pass() const;
  /// "exact" or "mod p^N"
  std::string comparison() const;
};

struct ExplogOptions {
  int trials = 20;
  std::uint64_t seed = 42;
  /// Leibniz and multiplicativity are checked on pairs of monomials of
  /// degree <= this, so operators live on A_{<=2 * leibniz_degree}.
  int leibniz_degree = 2;
  /// Also verify translation-operator identities (actions, invariance).
  bool operator_checks = true;
};

/// Identities of the group/Lie correspondence on sampled
/// points of G(bold_p R): exp/log round trips, log(x y) = H(log x, log y),
/// Leibniz and multiplicativity of operator log/exp, exp(log rho_x) = rho_x.
SuiteReport explog_suite(const FormalGroupLaw &F, int prime, const ExplogOptions &opts);

/// Operator log/exp identities only: Leibniz for log rho_x and
/// exp(log rho_x) = rho_x on A_{<=2 * leibniz_degree}.
SuiteReport operator_explog_suite(const FormalGroupLaw &F, int prime, const ExplogOptions &opts);

/// adjoint_action(x, psi(b)) = psi(e^{ad a} b), a = group_log(x), for every
/// basis vector b, plus the operator-level series e^{-A} w e^{A}.
SuiteReport adjoint_suite(const FormalGroupLaw &F, int prime, int trials, std::uint64_t seed);

/// [psi(e_i), psi(e_j)] = psi(C(e_i, e_j)), phi(psi(e_i)) = e_i, the
/// pairing with I/I^2, left invariance.  Operators on A_{<=op_degree}.
SuiteReport correspondence_suite(const FormalGroupLaw &F, int op_degree);

/// Conjugation x^{-1} y x acts unipotently on I/I^k for sampled x.
SuiteReport unipotent_suite(const FormalGroupLaw &F, int prime, int trials, std::uint64_t seed, int k);

/// Identity, inverse and associativity of (bold_p L, H).
SuiteReport gamma_suite(const RingLieAlgebra &L, int prime, int trials, std::uint64_t seed, int N);

} // namespace fglie
