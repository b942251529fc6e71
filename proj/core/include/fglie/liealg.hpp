#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "fglie/linalg.hpp"

namespace fglie {

/// A d-dimensional Lie algebra over Q: [e_i, e_j] = sum_k c^k_ij e_k.
/// Indices are 0-based; setting [e_i, e_j] also sets [e_j, e_i].
class StructureConstants {
public:
  StructureConstants() = default;
  explicit StructureConstants(int dimension);

  int dimension() const { return d_; }
  const mpq_class &operator()(int i, int j, int k) const { return c_[index(i, j, k)]; }
  void set_bracket(int i, int j, const QVector &result);
  QVector bracket_of_basis(int i, int j) const;

  QVector bracket(const QVector &a, const QVector &b) const;
  /// Matrix of ad x = [x, -] acting on column vectors.
  QMatrix ad(const QVector &x) const;
  QMatrix ad_basis(int i) const;

  bool is_abelian() const;
  friend bool operator==(const StructureConstants &, const StructureConstants &) = default;

private:
  int d_ = 0;
  std::vector<mpq_class> c_;

  size_t index(int i, int j, int k) const { return static_cast<size_t>((i * d_ + j) * d_ + k); }
};

struct JacobiReport {
  bool pass = true;
  /// First triple (i, j, l) with a nonzero Jacobi sum, 0-based.
  std::optional<std::array<int, 3>> witness;
  QVector residual;
};

JacobiReport check_jacobi(const StructureConstants &L);
QMatrix killing_form(const StructureConstants &L);

/// span{[a, b] : a in A, b in B}
Subspace bracket_span(const StructureConstants &L, const Subspace &A, const Subspace &B);

/// Largest solvable ideal via Cartan's criterion: the Killing-orthogonal
/// complement of [L, L].  Verified solvable through its derived series.
Subspace solvable_radical(const StructureConstants &L);

/// Dimensions of S, [S,S], [[S,S],[S,S]], ... until 0 or stable.
std::vector<int> derived_series(const StructureConstants &L, const Subspace &S);
/// Dimensions of S, [S,S], [S,[S,S]], ... until 0 or stable (the repeated
/// dimension is listed once more to show stabilization).
std::vector<int> lower_central_series(const StructureConstants &L, const Subspace &S);
std::vector<int> lower_central_series(const StructureConstants &L);
bool is_nilpotent(const StructureConstants &L, const Subspace &S);
bool is_nilpotent(const StructureConstants &L);
bool is_solvable(const StructureConstants &L, const Subspace &S);

enum class RadicalVerdict { Pass, Flag };

struct RadicalReport {
  Subspace radical;
  std::vector<int> radical_derived_series;
  std::vector<int> radical_lower_central_series;
  bool radical_nilpotent = false;
  RadicalVerdict verdict = RadicalVerdict::Pass;
};

/// PASS when the solvable radical is nilpotent, FLAG otherwise.
RadicalReport radical_nilpotency_report(const StructureConstants &L);

/// Nilpotency class: the number of nonzero terms of the lower central
/// series, or nullopt when the algebra is not nilpotent.
std::optional<int> nilpotency_class(const StructureConstants &L);

namespace algebras {
StructureConstants abelian(int d);
/// [e1,e2] = e3
StructureConstants heisenberg();
/// basis (h, e, f): [h,e] = 2e, [h,f] = -2f, [e,f] = h
StructureConstants sl2();
/// [x,y] = y
StructureConstants solvable2();
StructureConstants direct_sum(const StructureConstants &a, const StructureConstants &b);
/// Free nilpotent Lie algebra on k generators of class c, basis the Lyndon
/// words of length <= c in graded order.
StructureConstants free_nilpotent(int k, int c);
/// Resolves "sl2", "heisenberg", "solvable2", "abelian:d",
/// "free_nilpotent:k:c" and "a+b" direct sums.
StructureConstants by_name(const std::string &name);
} // namespace algebras

} // namespace fglie
