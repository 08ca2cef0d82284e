// SPDX-License-Identifier: Apache-2.0
#include "driftshap/bootstrap.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "driftshap/alignment.hpp"
#include "driftshap/shapley.hpp"
#include "rng.hpp"

namespace driftshap {

namespace {

uint64_t resolve_seed(const BootstrapConfig& cfg) {
  if (cfg.seed) return *cfg.seed;
  if (cfg.deterministic) {
    throw InputError("bootstrap in deterministic mode requires a seed");
  }
  return std::random_device{}();
}

int resolve_resample_size(const BootstrapConfig& cfg, int m1, int m2) {
  const int k = cfg.resample_size.value_or(std::min({m1, m2, 1000}));
  if (k < 1) throw InputError("resample size must be at least 1");
  if (k > cfg.max_resample_size) {
    throw InputError("resample size " + std::to_string(k) + " exceeds the sanity ceiling of " +
                     std::to_string(cfg.max_resample_size));
  }
  return k;
}

Matrix draw_rows(const Matrix& from, int k, std::mt19937_64& rng) {
  Matrix out(k, from.cols());
  for (int i = 0; i < k; ++i) {
    const int src = static_cast<int>(detail::uniform_index(rng, from.rows()));
    std::copy(from.row(src).begin(), from.row(src).end(), out.row(i).begin());
  }
  return out;
}

constexpr int kLowConfidenceRepetitions = 10;

}  // namespace

std::pair<double, double> percentile_interval(std::vector<double> values, double level) {
  if (values.empty()) throw InputError("percentile interval needs at least one value");
  if (!(level > 0.0 && level < 1.0)) throw InputError("confidence level must be in (0, 1)");
  std::sort(values.begin(), values.end());
  const double q_low = (1.0 - level) / 2.0;
  const double q_high = 1.0 - q_low;
  const double span = static_cast<double>(values.size() - 1);
  // Endpoints round outward to whole order statistics: small repetition
  // counts widen toward [min, max] instead of under-covering.
  const size_t lo = static_cast<size_t>(std::floor(q_low * span));
  const size_t hi = static_cast<size_t>(std::ceil(q_high * span));
  return {values[lo], values[hi]};
}

BootstrapDriftResult bootstrap_drift(const Sample& raw_explicand, const Sample& raw_baseline,
                                     const ModelFn& model, DriftMetricId metric,
                                     const BootstrapConfig& cfg, const HistogramConfig& histogram) {
  if (raw_explicand.n() != raw_baseline.n()) {
    throw InputError("samples must share the feature dimension: " +
                     std::to_string(raw_explicand.n()) + " vs " +
                     std::to_string(raw_baseline.n()));
  }
  if (cfg.repetitions < 2) throw InputError("bootstrap needs at least 2 repetitions");
  const uint64_t seed = resolve_seed(cfg);
  const int k = resolve_resample_size(cfg, raw_explicand.m(), raw_baseline.m());

  BootstrapDriftResult result;
  result.seed = seed;
  result.low_confidence = cfg.repetitions < kLowConfidenceRepetitions;
  result.repetition_values.resize(cfg.repetitions);
  for (int r = 0; r < cfg.repetitions; ++r) {
    // Seed stream split per repetition index: reproducible for any execution order.
    auto rng = detail::stream(seed, static_cast<uint64_t>(r));
    const Matrix e = draw_rows(raw_explicand.values(), k, rng);
    const Matrix b = draw_rows(raw_baseline.values(), k, rng);
    result.repetition_values[r] = drift(metric, model(e), model(b), histogram);
  }
  result.mean = std::accumulate(result.repetition_values.begin(), result.repetition_values.end(),
                                0.0) /
                cfg.repetitions;
  std::tie(result.ci_low, result.ci_high) =
      percentile_interval(result.repetition_values, cfg.confidence_level);
  return result;
}

BootstrapAttributionResult bootstrap_attributions(
    const Sample& raw_explicand, const Sample& raw_baseline, const ModelFn& model,
    DriftMetricId metric, const GroupSpec& feature_groups, int permutations,
    const BootstrapConfig& cfg, const HistogramConfig& histogram) {
  if (raw_explicand.n() != raw_baseline.n()) {
    throw InputError("samples must share the feature dimension");
  }
  if (cfg.repetitions < 2) throw InputError("bootstrap needs at least 2 repetitions");
  for (const Group& g : feature_groups.groups()) {
    if (static_cast<int>(g.rows.size()) != feature_groups.m()) {
      throw InputError("bootstrap attribution requires feature groups spanning all rows; group '" +
                       g.name + "' does not (row indices change meaning under resampling)");
    }
  }
  const uint64_t seed = resolve_seed(cfg);
  const int k = resolve_resample_size(cfg, raw_explicand.m(), raw_baseline.m());
  const int G = feature_groups.size();

  // Rebuild the feature partition for the resampled shape.
  std::vector<int> all_rows(k);
  std::iota(all_rows.begin(), all_rows.end(), 0);
  std::vector<Group> groups;
  groups.reserve(G);
  for (const Group& g : feature_groups.groups()) groups.push_back(Group{g.name, all_rows, g.features});
  const GroupSpec per_rep_spec(std::move(groups), k, raw_explicand.n());

  std::vector<std::vector<double>> per_group_values(G);
  std::vector<double> totals(cfg.repetitions);
  for (int r = 0; r < cfg.repetitions; ++r) {
    auto rng = detail::stream(seed, static_cast<uint64_t>(r));
    Sample e(draw_rows(raw_explicand.values(), k, rng), raw_explicand.feature_names());
    Sample b(draw_rows(raw_baseline.values(), k, rng), raw_baseline.feature_names());
    const Alignment alignment =
        align(e, b, model, default_alignment(metric), detail::splitmix64(seed) + r);
    ValueFunctionContext ctx(e, apply_alignment(b, alignment), model, metric, {}, histogram);
    const AttributionReport rep =
        shapley_sampled(ctx, per_rep_spec, permutations, detail::splitmix64(seed ^ 0x5eedULL) + r);
    for (int g = 0; g < G; ++g) per_group_values[g].push_back(rep.per_group[g].value);
    totals[r] = rep.total_drift;
  }

  BootstrapAttributionResult result;
  result.seed = seed;
  result.repetitions = cfg.repetitions;
  result.low_confidence = cfg.repetitions < kLowConfidenceRepetitions;
  result.mean_total_drift = std::accumulate(totals.begin(), totals.end(), 0.0) / cfg.repetitions;
  for (int g = 0; g < G; ++g) {
    const auto& vals = per_group_values[g];
    const double mean = std::accumulate(vals.begin(), vals.end(), 0.0) / vals.size();
    auto [lo, hi] = percentile_interval(vals, cfg.confidence_level);
    result.per_group.push_back(
        GroupAttribution{feature_groups.groups()[g].name, mean, lo, hi});
  }
  return result;
}

std::vector<std::string> group_balance_warnings(const std::vector<std::string>& labels_a,
                                                const std::vector<std::string>& labels_b,
                                                double threshold) {
  if (labels_a.empty() || labels_b.empty()) return {};
  std::map<std::string, std::pair<double, double>> fractions;
  for (const auto& l : labels_a) fractions[l].first += 1.0 / labels_a.size();
  for (const auto& l : labels_b) fractions[l].second += 1.0 / labels_b.size();
  std::vector<std::string> warnings;
  for (const auto& [label, f] : fractions) {
    const double gap = std::abs(f.first - f.second);
    if (gap > threshold) {
      warnings.push_back("slice '" + label + "' covers " +
                         std::to_string(static_cast<int>(std::round(f.first * 100))) +
                         "% of the explicand but " +
                         std::to_string(static_cast<int>(std::round(f.second * 100))) +
                         "% of the baseline; aggregated drift over such a mix shift can be "
                         "misleading");
    }
  }
  return warnings;
}

}  // namespace driftshap
