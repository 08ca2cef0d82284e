// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>

#include "driftshap/types.hpp"

namespace driftshap {

// Discretization used by the Jensen-Shannon divergence: equal-width bins
// spanning the joint min..max of both samples, log base 2 (bounds the result
// to [0, 1]).
struct HistogramConfig {
  int bin_count = 10;
};

// Mean absolute difference of the two sorted samples; the exact 1-D optimal
// transport cost. Symmetric, non-negative, zero iff the sorted samples match.
double wasserstein1(std::span<const double> a, std::span<const double> b);

// mean(a) - mean(b). Signed: swapping the arguments flips the sign.
double expected_value_difference(std::span<const double> a, std::span<const double> b);

// Jensen-Shannon divergence of the two binned empirical distributions,
// in [0, 1]. Returns 0 for a degenerate joint range (all values identical).
double jensen_shannon(std::span<const double> a, std::span<const double> b,
                      const HistogramConfig& cfg = {});

// Two-sample Kolmogorov-Smirnov statistic: sup |ECDF_a - ECDF_b| evaluated at
// every sample point (exact for step CDFs), in [0, 1].
double ks_statistic(std::span<const double> a, std::span<const double> b);

double drift(DriftMetricId metric, std::span<const double> a, std::span<const double> b,
             const HistogramConfig& cfg = {});

double wasserstein1(const PredictionVector& a, const PredictionVector& b);
double expected_value_difference(const PredictionVector& a, const PredictionVector& b);
double jensen_shannon(const PredictionVector& a, const PredictionVector& b,
                      const HistogramConfig& cfg = {});
double ks_statistic(const PredictionVector& a, const PredictionVector& b);
double drift(DriftMetricId metric, const PredictionVector& a, const PredictionVector& b,
             const HistogramConfig& cfg = {});

}  // namespace driftshap
