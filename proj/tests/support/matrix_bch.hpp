#pragma once

#include "fglie/freelie.hpp"
#include "oracles.hpp"

namespace oracle {

/// Evaluates a two-generator Lie series at the matrices X, Y.
inline Mat evaluate_at_matrices(const fglie::LieSeries &s, const Mat &X, const Mat &Y) {
  const Mat gens[2] = {X, Y};
  return fglie::evaluate_lie_series<Mat>(
      s, std::span<const Mat>(gens, 2), Mat(X.size()), [](const Mat &a, const Mat &b) { return bracket(a, b); },
      [](const Mat &a, const mpq_class &c) { return c * a; }, [](const Mat &a, const Mat &b) { return a + b; },
      [](const Mat &a) { return a.is_zero(); });
}

} // namespace oracle
