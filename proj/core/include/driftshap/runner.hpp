// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>

#include "driftshap/alignment.hpp"
#include "driftshap/ig.hpp"
#include "driftshap/shapley.hpp"
#include "driftshap/types.hpp"

namespace driftshap {

// One attribution run end to end: validate the pair, pick the alignment
// (default depends on the metric), build the context, dispatch the method.
// With the sampled alignment policy the run is repeated over
// alignment_samples independent permutations and the attributions averaged,
// approximating the expectation over all pairings.
struct AttributionRequest {
  Sample explicand;
  Sample baseline;
  ModelFn model;
  GroupSpec groups;
  DriftMetricId metric = DriftMetricId::w1;
  AttributionMethod method = AttributionMethod::shapley_exact;
  std::optional<AlignmentPolicy> alignment;  // default: per metric
  int permutations = 2000;                   // sampled Shapley
  PathConfig path;                           // group IG
  HistogramConfig histogram;
  TransformChain transforms;
  uint64_t seed = 12345;
  int alignment_samples = 30;  // sampled alignment averaging
  int threads = 1;
};

AttributionReport run_attribution(const AttributionRequest& request);

// Drift between the two samples' predictions, no attribution.
double run_drift(const Sample& explicand, const Sample& baseline, const ModelFn& model,
                 DriftMetricId metric, const HistogramConfig& histogram = {});

}  // namespace driftshap
