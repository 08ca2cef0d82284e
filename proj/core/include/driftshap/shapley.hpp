// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "driftshap/alignment.hpp"
#include "driftshap/metrics.hpp"
#include "driftshap/model.hpp"
#include "driftshap/types.hpp"

namespace driftshap {

// Ordered chain of elementwise transforms applied to prediction vectors
// before the drift metric. Empty chain = identity.
struct TransformChain {
  std::vector<std::function<double(double)>> stages;

  bool empty() const { return stages.empty(); }
  void apply(std::vector<double>& values) const;
};

// Everything a coalition evaluation needs, fixed for the whole attribution
// run: the explicand, the row-aligned baseline, the model, the transform
// chain, and the drift metric. Immutable once built; safe to share across
// workers.
class ValueFunctionContext {
 public:
  ValueFunctionContext(Sample explicand, Sample aligned_baseline, ModelFn model,
                       DriftMetricId metric, TransformChain transforms = {},
                       HistogramConfig histogram = {});

  const Sample& explicand() const { return explicand_; }
  const Sample& aligned_baseline() const { return aligned_baseline_; }
  const ModelFn& model() const { return model_; }
  DriftMetricId metric() const { return metric_; }
  const TransformChain& transforms() const { return transforms_; }
  const HistogramConfig& histogram() const { return histogram_; }

  // G(F(aligned baseline)), computed once.
  const std::vector<double>& baseline_outputs() const { return baseline_outputs_; }

  // D(G(F(X)), G(F(aligned baseline))) for an arbitrary cell matrix X of the
  // explicand's shape.
  double objective(const Matrix& cells) const;

  // Total drift D(G(F(explicand)), G(F(aligned baseline))).
  double total_drift() const;

 private:
  Sample explicand_;
  Sample aligned_baseline_;
  ModelFn model_;
  DriftMetricId metric_;
  TransformChain transforms_;
  HistogramConfig histogram_;
  std::vector<double> baseline_outputs_;
};

ValueFunctionContext make_context(const ValidatedPair& pair, const Alignment& alignment,
                                  ModelFn model, DriftMetricId metric,
                                  TransformChain transforms = {}, HistogramConfig histogram = {});

// Value of one coalition: cells of the listed groups come from the explicand,
// every other cell from the aligned baseline; returns the drift between the
// hybrid's transformed predictions and the baseline's.
double coalition_value(const ValueFunctionContext& ctx, std::span<const int> coalition,
                       const GroupSpec& spec);

struct ShapleyConfig {
  int exact_limit = 20;           // max groups for exhaustive enumeration
  int threads = 1;                // worker cap; results do not depend on it
  double confidence_level = 0.95; // sampled-estimator CIs
};

// Exact Shapley values over all 2^G coalitions (one evaluation per coalition,
// memoized). Throws InputError when the group count exceeds exact_limit,
// directing the caller to the sampled estimator.
AttributionReport shapley_exact(const ValueFunctionContext& ctx, const GroupSpec& spec,
                                const ShapleyConfig& cfg = {});

// Monte Carlo estimator over uniform random group permutations: averages the
// marginal contribution of each group, reports standard-error CIs, and
// distributes the (already telescoping-small) efficiency residual
// proportionally to per-group standard errors. The uncorrected residual is
// kept in estimator metadata.
AttributionReport shapley_sampled(const ValueFunctionContext& ctx, const GroupSpec& spec,
                                  int permutations, uint64_t seed,
                                  const ShapleyConfig& cfg = {});

}  // namespace driftshap
