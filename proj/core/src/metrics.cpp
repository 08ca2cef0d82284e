// SPDX-License-Identifier: Apache-2.0
#include "driftshap/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "driftshap/error.hpp"

namespace driftshap {

namespace {

void check_inputs(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty()) throw InputError("drift metric inputs must be non-empty");
  if (a.size() != b.size()) {
    throw InputError("drift metric inputs must have equal length: " + std::to_string(a.size()) +
                     " vs " + std::to_string(b.size()));
  }
}

// Identical inputs short-circuit to an exact 0.0 so the identity axiom holds
// without a tolerance. NaN is excluded upstream, so == is safe.
bool identical(std::span<const double> a, std::span<const double> b) {
  return std::equal(a.begin(), a.end(), b.begin());
}

}  // namespace

double wasserstein1(std::span<const double> a, std::span<const double> b) {
  check_inputs(a, b);
  if (identical(a, b)) return 0.0;
  std::vector<double> sa(a.begin(), a.end());
  std::vector<double> sb(b.begin(), b.end());
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  double sum = 0.0;
  for (size_t i = 0; i < sa.size(); ++i) sum += std::abs(sa[i] - sb[i]);
  return sum / static_cast<double>(sa.size());
}

double expected_value_difference(std::span<const double> a, std::span<const double> b) {
  check_inputs(a, b);
  if (identical(a, b)) return 0.0;
  double sum = 0.0;
  for (size_t i = 0; i < a.size(); ++i) sum += a[i] - b[i];
  return sum / static_cast<double>(a.size());
}

double jensen_shannon(std::span<const double> a, std::span<const double> b,
                      const HistogramConfig& cfg) {
  check_inputs(a, b);
  if (cfg.bin_count < 2) {
    throw InputError("histogram bin count must be at least 2, got " +
                     std::to_string(cfg.bin_count));
  }
  if (identical(a, b)) return 0.0;

  double lo = a[0], hi = a[0];
  for (double v : a) { lo = std::min(lo, v); hi = std::max(hi, v); }
  for (double v : b) { lo = std::min(lo, v); hi = std::max(hi, v); }
  if (hi == lo) return 0.0;  // every value in both samples identical

  const int bins = cfg.bin_count;
  const double width = (hi - lo) / bins;
  std::vector<double> p(bins, 0.0), q(bins, 0.0);
  auto bin_of = [&](double v) {
    const int k = static_cast<int>((v - lo) / width);
    return std::clamp(k, 0, bins - 1);
  };
  for (double v : a) p[bin_of(v)] += 1.0;
  for (double v : b) q[bin_of(v)] += 1.0;
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());

  double result = 0.0;
  for (int k = 0; k < bins; ++k) {
    const double pk = p[k] / na;
    const double qk = q[k] / nb;
    const double mk = 0.5 * (pk + qk);
    if (pk > 0.0) result += 0.5 * pk * std::log2(pk / mk);
    if (qk > 0.0) result += 0.5 * qk * std::log2(qk / mk);
  }
  return std::clamp(result, 0.0, 1.0);
}

double ks_statistic(std::span<const double> a, std::span<const double> b) {
  check_inputs(a, b);
  if (identical(a, b)) return 0.0;
  std::vector<double> sa(a.begin(), a.end());
  std::vector<double> sb(b.begin(), b.end());
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  const double na = static_cast<double>(sa.size());
  const double nb = static_cast<double>(sb.size());

  // Walk the merged value sequence; after consuming all copies of a value the
  // two ECDFs are fixed at that point.
  double best = 0.0;
  size_t i = 0, j = 0;
  while (i < sa.size() || j < sb.size()) {
    const double x = (j >= sb.size() || (i < sa.size() && sa[i] <= sb[j])) ? sa[i] : sb[j];
    while (i < sa.size() && sa[i] == x) ++i;
    while (j < sb.size() && sb[j] == x) ++j;
    best = std::max(best, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
  }
  return std::min(best, 1.0);
}

double drift(DriftMetricId metric, std::span<const double> a, std::span<const double> b,
             const HistogramConfig& cfg) {
  switch (metric) {
    case DriftMetricId::w1: return wasserstein1(a, b);
    case DriftMetricId::evd: return expected_value_difference(a, b);
    case DriftMetricId::jsd: return jensen_shannon(a, b, cfg);
    case DriftMetricId::ks: return ks_statistic(a, b);
  }
  throw std::logic_error("unknown metric");
}

double wasserstein1(const PredictionVector& a, const PredictionVector& b) {
  return wasserstein1(std::span<const double>(a.values), std::span<const double>(b.values));
}
double expected_value_difference(const PredictionVector& a, const PredictionVector& b) {
  return expected_value_difference(std::span<const double>(a.values),
                                   std::span<const double>(b.values));
}
double jensen_shannon(const PredictionVector& a, const PredictionVector& b,
                      const HistogramConfig& cfg) {
  return jensen_shannon(std::span<const double>(a.values), std::span<const double>(b.values), cfg);
}
double ks_statistic(const PredictionVector& a, const PredictionVector& b) {
  return ks_statistic(std::span<const double>(a.values), std::span<const double>(b.values));
}
double drift(DriftMetricId metric, const PredictionVector& a, const PredictionVector& b,
             const HistogramConfig& cfg) {
  return drift(metric, std::span<const double>(a.values), std::span<const double>(b.values), cfg);
}

}  // namespace driftshap
