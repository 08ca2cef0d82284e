// SPDX-License-Identifier: Apache-2.0
#include "driftshap/shapley.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

#include "parallel.hpp"
#include "rng.hpp"

namespace driftshap {

namespace {

// Inverse standard normal CDF (Acklam's rational approximation, ~1e-9).
double normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) throw InputError("confidence level must be in (0, 1)");
  static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                             -2.759285104469687e+02, 1.383577518672690e+02,
                             -3.066479806614716e+01, 2.506628277459239e+00};
  static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                             -1.556989798598866e+02, 6.680131188771972e+01,
                             -1.328068155288572e+01};
  static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                             -2.400758277161838e+00, -2.549732539343734e+00,
                             4.374664141464968e+00, 2.938163982698783e+00};
  static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                             2.445134137142996e+00, 3.754408661907416e+00};
  const double plow = 0.02425;
  double q, r;
  if (p < plow) {
    q = std::sqrt(-2.0 * std::log(p));
    return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  if (p > 1.0 - plow) {
    q = std::sqrt(-2.0 * std::log(1.0 - p));
    return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  q = p - 0.5;
  r = q * q;
  return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
         (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
}

void copy_group_cells(const Matrix& from, Matrix& to, const Group& group) {
  for (int r : group.rows) {
    for (int f : group.features) to(r, f) = from(r, f);
  }
}

}  // namespace

void TransformChain::apply(std::vector<double>& values) const {
  for (const auto& stage : stages) {
    for (double& v : values) v = stage(v);
  }
}

ValueFunctionContext::ValueFunctionContext(Sample explicand, Sample aligned_baseline,
                                           ModelFn model, DriftMetricId metric,
                                           TransformChain transforms, HistogramConfig histogram)
    : explicand_(std::move(explicand)),
      aligned_baseline_(std::move(aligned_baseline)),
      model_(std::move(model)),
      metric_(metric),
      transforms_(std::move(transforms)),
      histogram_(histogram) {
  if (explicand_.m() != aligned_baseline_.m() || explicand_.n() != aligned_baseline_.n()) {
    throw InputError("explicand and aligned baseline must have the same shape");
  }
  baseline_outputs_ = model_(aligned_baseline_.values());
  transforms_.apply(baseline_outputs_);
}

double ValueFunctionContext::objective(const Matrix& cells) const {
  std::vector<double> outputs = model_(cells);
  transforms_.apply(outputs);
  return drift(metric_, outputs, baseline_outputs_, histogram_);
}

double ValueFunctionContext::total_drift() const { return objective(explicand_.values()); }

double coalition_value(const ValueFunctionContext& ctx, std::span<const int> coalition,
                       const GroupSpec& spec) {
  Matrix hybrid = ctx.aligned_baseline().values();
  for (int g : coalition) {
    if (g < 0 || g >= spec.size()) {
      throw InputError("coalition group index " + std::to_string(g) + " out of range [0," +
                       std::to_string(spec.size()) + ")");
    }
    copy_group_cells(ctx.explicand().values(), hybrid, spec.groups()[g]);
  }
  return ctx.objective(hybrid);
}

AttributionReport shapley_exact(const ValueFunctionContext& ctx, const GroupSpec& spec,
                                const ShapleyConfig& cfg) {
  const int G = spec.size();
  if (G > cfg.exact_limit || G > 26) {
    throw InputError("exact enumeration over " + std::to_string(G) + " groups exceeds the limit of " +
                     std::to_string(std::min(cfg.exact_limit, 26)) +
                     " (2^G coalition evaluations); use the sampled estimator");
  }
  if (spec.m() != ctx.explicand().m() || spec.n() != ctx.explicand().n()) {
    throw InputError("group spec shape does not match the samples");
  }

  const uint32_t n_masks = 1u << G;
  std::vector<double> value(n_masks);
  detail::parallel_for_index(n_masks, cfg.threads, [&](size_t mask) {
    Matrix hybrid = ctx.aligned_baseline().values();
    for (int g = 0; g < G; ++g) {
      if (mask >> g & 1u) copy_group_cells(ctx.explicand().values(), hybrid, spec.groups()[g]);
    }
    value[mask] = ctx.objective(hybrid);
  });

  // weight for a coalition of size s: s!(G-1-s)!/G! = 1/(G * C(G-1, s))
  std::vector<double> weight(G);
  double binom = 1.0;  // C(G-1, s)
  for (int s = 0; s < G; ++s) {
    weight[s] = 1.0 / (static_cast<double>(G) * binom);
    binom = binom * (G - 1 - s) / (s + 1);
  }

  std::vector<double> phi(G, 0.0);
  for (uint32_t mask = 0; mask < n_masks; ++mask) {
    const int s = std::popcount(mask);
    for (int g = 0; g < G; ++g) {
      if (!(mask >> g & 1u)) {
        phi[g] += weight[s] * (value[mask | (1u << g)] - value[mask]);
      }
    }
  }

  AttributionReport report;
  report.metric = ctx.metric();
  report.method = AttributionMethod::shapley_exact;
  report.total_drift = value[n_masks - 1];
  report.per_group.reserve(G);
  for (int g = 0; g < G; ++g) {
    report.per_group.push_back(GroupAttribution{spec.groups()[g].name, phi[g], {}, {}});
  }
  return report;
}

AttributionReport shapley_sampled(const ValueFunctionContext& ctx, const GroupSpec& spec,
                                  int permutations, uint64_t seed, const ShapleyConfig& cfg) {
  if (permutations < 1) throw InputError("permutation count must be at least 1");
  if (spec.m() != ctx.explicand().m() || spec.n() != ctx.explicand().n()) {
    throw InputError("group spec shape does not match the samples");
  }
  const int G = spec.size();
  const int n = ctx.explicand().n();

  // One permutation walk: groups enter one by one; only the entering group's
  // rows need re-prediction, and the marginals telescope to the total drift.
  std::vector<double> marginals(static_cast<size_t>(permutations) * G);
  detail::parallel_for_index(static_cast<size_t>(permutations), cfg.threads, [&](size_t t) {
    auto rng = detail::stream(seed, t);
    std::vector<int> order(G);
    std::iota(order.begin(), order.end(), 0);
    detail::shuffle(std::span<int>(order), rng);

    Matrix hybrid = ctx.aligned_baseline().values();
    std::vector<double> outputs = ctx.model()(hybrid);

    double previous = 0.0;  // empty coalition: drift of the baseline against itself
    for (int g : order) {
      const Group& group = spec.groups()[g];
      copy_group_cells(ctx.explicand().values(), hybrid, group);
      Matrix block(static_cast<int>(group.rows.size()), n);
      for (size_t k = 0; k < group.rows.size(); ++k) {
        std::copy(hybrid.row(group.rows[k]).begin(), hybrid.row(group.rows[k]).end(),
                  block.row(static_cast<int>(k)).begin());
      }
      const std::vector<double> block_outputs = ctx.model()(block);
      for (size_t k = 0; k < group.rows.size(); ++k) outputs[group.rows[k]] = block_outputs[k];

      std::vector<double> transformed = outputs;
      ctx.transforms().apply(transformed);
      const double current =
          drift(ctx.metric(), transformed, ctx.baseline_outputs(), ctx.histogram());
      marginals[t * G + g] = current - previous;
      previous = current;
    }
  });

  std::vector<double> mean(G, 0.0), se(G, 0.0);
  for (int t = 0; t < permutations; ++t) {
    for (int g = 0; g < G; ++g) mean[g] += marginals[static_cast<size_t>(t) * G + g];
  }
  for (int g = 0; g < G; ++g) mean[g] /= permutations;
  if (permutations > 1) {
    for (int t = 0; t < permutations; ++t) {
      for (int g = 0; g < G; ++g) {
        const double d = marginals[static_cast<size_t>(t) * G + g] - mean[g];
        se[g] += d * d;
      }
    }
    for (int g = 0; g < G; ++g) {
      se[g] = std::sqrt(se[g] / (permutations - 1)) / std::sqrt(static_cast<double>(permutations));
    }
  }

  const double total = ctx.total_drift();
  const double residual = total - std::accumulate(mean.begin(), mean.end(), 0.0);
  double se_sum = std::accumulate(se.begin(), se.end(), 0.0);
  for (int g = 0; g < G; ++g) {
    const double share = se_sum > 0.0 ? se[g] / se_sum : 1.0 / G;
    mean[g] += residual * share;
  }

  const double z = normal_quantile(0.5 + cfg.confidence_level / 2.0);
  AttributionReport report;
  report.metric = ctx.metric();
  report.method = AttributionMethod::shapley_sampled;
  report.total_drift = total;
  report.confidence_level = cfg.confidence_level;
  report.estimator.seed = seed;
  report.estimator.permutations = permutations;
  report.estimator.pre_correction_residual = residual;
  report.per_group.reserve(G);
  for (int g = 0; g < G; ++g) {
    report.per_group.push_back(GroupAttribution{spec.groups()[g].name, mean[g],
                                                mean[g] - z * se[g], mean[g] + z * se[g]});
  }
  return report;
}

ValueFunctionContext make_context(const ValidatedPair& pair, const Alignment& alignment,
                                  ModelFn model, DriftMetricId metric, TransformChain transforms,
                                  HistogramConfig histogram) {
  return ValueFunctionContext(pair.explicand, apply_alignment(pair.baseline, alignment),
                              std::move(model), metric, std::move(transforms), histogram);
}

}  // namespace driftshap
