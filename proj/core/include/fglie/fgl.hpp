#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fglie/bch.hpp"
#include "fglie/operator.hpp"
#include "fglie/series.hpp"

namespace fglie {

/// d power series F_k(x, y) in 2d variables (x first, then y), truncated at
/// total degree D.
class FormalGroupLaw {
public:
  FormalGroupLaw() = default;
  FormalGroupLaw(std::string name, std::vector<TruncSeries> components);

  const std::string &name() const { return name_; }
  int dimension() const { return static_cast<int>(components_.size()); }
  Ring ring() const { return components_.front().ring(); }
  int degree_bound() const { return components_.front().degree_bound(); }
  const std::vector<TruncSeries> &components() const { return components_; }
  const TruncSeries &component(int k) const { return components_[static_cast<size_t>(k)]; }
  /// Highest total degree carrying a nonzero term.
  int polynomial_degree() const;

  /// x * y = F(x, y) evaluated at a point.
  Point multiply(const Point &x, const Point &y) const;
  /// The z with F(x, z) = 0, by Newton iteration from z = -x.
  Point inverse(const Point &x) const;
  Point identity() const { return zero_point(ring(), dimension()); }

  /// Raises unless x has d coordinates in the maximal ideal.
  void require_point(const Point &x) const;

private:
  std::string name_;
  std::vector<TruncSeries> components_;
};

namespace laws {
FormalGroupLaw additive(int d, Ring ring, int D);
/// F = x + y + xy
FormalGroupLaw multiplicative(Ring ring, int D);
/// F = (x1 + y1, x2 + y2, x3 + y3 + x1 y2)
FormalGroupLaw heisenberg(Ring ring, int D);
/// (1 + X)(1 + Y) on strictly upper triangular n x n matrices; coordinate
/// order runs along superdiagonals: (1,2), (2,3), ..., (1,3), ...
FormalGroupLaw unitriangular(int n, Ring ring, int D);
/// "additive", "additive:d", "multiplicative", "heisenberg", "unitriangular:n"
FormalGroupLaw by_name(const std::string &name, Ring ring, int D);
/// Coordinate labels, e.g. "x13" for unitriangular laws.
std::vector<std::string> coordinate_names(const std::string &name, int d);
} // namespace laws

struct AxiomReport {
  bool right_identity = true; // F(x, 0) = x
  bool left_identity = true;  // F(0, y) = y
  bool associativity = true;
  /// Description of the first failing axiom, component and monomial.
  std::string failure;
  bool pass() const { return right_identity && left_identity && associativity; }
};

AxiomReport check_axioms(const FormalGroupLaw &F);

/// Structure constants c^k_ij = b^k_ij - b^k_ji read from the mixed
/// quadratic part B of F.  Raises when pure quadratic terms are present or
/// when the bracket fails the Jacobi identity.
RingLieAlgebra lie_from_law(const FormalGroupLaw &F);

/// Operator degree used when none is given: D - 1.
int default_operator_degree(const FormalGroupLaw &F);

/// psi(a): f(y) -> sum_i a_i d/dx_i f(F(y, x)) at x = 0, on A_{<=k}.
/// Needs the law truncated at degree >= k + 1.
TruncOperator invariant_derivation(const FormalGroupLaw &F, const Point &a, int op_degree);

/// phi(w) = (w(x_1)(e), ..., w(x_d)(e)).
Point phi_of_derivation(const TruncOperator &w);

enum class Side { Left, Right };

/// rho_x f(y) = f(y x) (Right) or lambda_x f(y) = f(x^{-1} y) (Left) on
/// A_{<=k}.  Exact for laws affine in the translated argument (all
/// built-ins); otherwise the polynomial part of F is used.
TruncOperator translation(const FormalGroupLaw &F, const Point &x, Side side, int op_degree);

/// f(y) -> f(x^{-1} y x) on A_{<=k-1}, i.e. the action on A / I^k.
TruncOperator conjugation_operator(const FormalGroupLaw &F, const Point &x, int k);

struct CorrespondenceOptions {
  /// Degree of the truncated function algebra; 0 selects D - 1.
  int op_degree = 0;
  /// Over Q, allow summing only D terms of a non-terminating series.
  bool truncate_rational = true;
};

struct CorrespondenceResult {
  Point coordinates;
  bool exact = true;
  int terms = 0;
};

/// phi(log rho_x); x must lie in G(bold_p R) over p-adic rings.
CorrespondenceResult group_log(const FormalGroupLaw &F, const Point &x, const CorrespondenceOptions &opts = {});
/// Constant terms of exp(psi(a))(x_k).
CorrespondenceResult group_exp(const FormalGroupLaw &F, const Point &a, const CorrespondenceOptions &opts = {});

/// rho_x^{-1} w rho_x
TruncOperator adjoint_action(const FormalGroupLaw &F, const Point &x, const TruncOperator &w);

/// e^{ad a}(b) = sum_i ad_a^i(b) / i!, with ad_a(b) = [b, a].  This is the
/// convention under which adjoint_action(x, psi(b)) = psi(e^{ad a} b) for
/// a = group_log(x).
Point adjoint_coordinates(const RingLieAlgebra &L, const Point &a, const Point &b,
                          std::optional<int> truncate_terms = std::nullopt);

/// True when every coordinate has valuation >= v_p(bold_p) (always true
/// over Q).
bool in_bold_p_group(Ring ring, const Point &x);

} // namespace fglie
