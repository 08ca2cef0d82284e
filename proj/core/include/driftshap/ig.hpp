// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "driftshap/shapley.hpp"
#include "driftshap/types.hpp"

namespace driftshap {

enum class QuadratureRule { midpoint, trapezoid };

struct PathConfig {
  int steps = 64;
  // Midpoint is the default: it never evaluates the path endpoints, where the
  // Wasserstein objective sits exactly on the kinks of its absolute values
  // (the hybrid equals the baseline at alpha = 0), and it integrates the
  // piecewise-linear gradients of polynomial models exactly. Trapezoid is
  // available for smooth objectives.
  QuadratureRule rule = QuadratureRule::midpoint;
  double fd_epsilon = 1e-5;  // relative to cell scale, absolute floor 1e-8
  int threads = 1;
};

// Straight-line path attribution of the drift objective
// H(X) = D(G(F(X)), G(F(B))) from the aligned baseline B to the explicand.
// Each cell receives (explicand - baseline) times the quadrature average of
// the central-finite-difference partial of H along the path; a group's
// attribution is the sum over its cells. Only differentiable metrics (w1,
// evd) are accepted.
AttributionReport group_ig(const ValueFunctionContext& ctx, const GroupSpec& spec,
                           const PathConfig& cfg = {});

// |sum of attributions - total drift|; callers compare against a tolerance.
double completeness_check(const AttributionReport& report, const ValueFunctionContext& ctx);

}  // namespace driftshap
