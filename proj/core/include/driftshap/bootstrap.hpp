// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "driftshap/metrics.hpp"
#include "driftshap/model.hpp"
#include "driftshap/types.hpp"

namespace driftshap {

struct BootstrapConfig {
  // Rows drawn (with replacement) from each sample per repetition.
  // Defaults to min(m1, m2, 1000).
  std::optional<int> resample_size;
  int repetitions = 100;
  double confidence_level = 0.95;
  std::optional<uint64_t> seed;
  bool deterministic = true;  // when set, a missing seed is an error
  int max_resample_size = 1'000'000;
};

struct BootstrapDriftResult {
  double mean = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
  // Fewer than 10 repetitions give percentile endpoints too coarse to trust.
  bool low_confidence = false;
  std::vector<double> repetition_values;
  uint64_t seed = 0;
};

// Expected drift with percentile confidence bounds for unequal-size or large
// samples: each repetition draws resample_size rows with replacement from
// both samples and computes the drift on the equal-shaped pair. Percentile
// endpoints are rounded outward to the enclosing order statistics, so small
// repetition counts err on the wide side (R = 2 degenerates to [min, max]).
BootstrapDriftResult bootstrap_drift(const Sample& raw_explicand, const Sample& raw_baseline,
                                     const ModelFn& model, DriftMetricId metric,
                                     const BootstrapConfig& cfg = {},
                                     const HistogramConfig& histogram = {});

struct BootstrapAttributionResult {
  std::vector<GroupAttribution> per_group;  // means with percentile CIs
  double mean_total_drift = 0.0;
  bool low_confidence = false;
  uint64_t seed = 0;
  int repetitions = 0;
};

// Same resampling wrapper around the sampled Shapley estimator. Row indices
// change meaning under resampling, so only feature partitions (every group
// spanning all rows) are accepted.
BootstrapAttributionResult bootstrap_attributions(
    const Sample& raw_explicand, const Sample& raw_baseline, const ModelFn& model,
    DriftMetricId metric, const GroupSpec& feature_groups, int permutations,
    const BootstrapConfig& cfg = {}, const HistogramConfig& histogram = {});

// Flags row-label proportions that differ by more than `threshold` between
// the two samples (aggregated slices can hide or invert per-slice drift when
// the mix shifts). Returns one message per offending label.
std::vector<std::string> group_balance_warnings(const std::vector<std::string>& labels_a,
                                                const std::vector<std::string>& labels_b,
                                                double threshold = 0.10);

// Conservative percentile interval: endpoints rounded outward to whole order
// statistics. Exposed for reuse by the attribution bootstrap and tests.
std::pair<double, double> percentile_interval(std::vector<double> values, double level);

}  // namespace driftshap
