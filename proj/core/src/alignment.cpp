// SPDX-License-Identifier: Apache-2.0
#include "driftshap/alignment.hpp"

#include <algorithm>
#include <numeric>

#include "rng.hpp"

namespace driftshap {

namespace {

// Row order after ranking by prediction; equal predictions keep row order.
std::vector<int> rank_order(const std::vector<double>& predictions) {
  std::vector<int> order(predictions.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return predictions[a] < predictions[b]; });
  return order;
}

}  // namespace

Alignment align(const Sample& explicand, const Sample& baseline, const ModelFn& model,
                AlignmentPolicy policy, uint64_t seed) {
  if (explicand.m() != baseline.m()) {
    throw InputError("alignment needs equal row counts: " + std::to_string(explicand.m()) +
                     " vs " + std::to_string(baseline.m()));
  }
  const int m = explicand.m();
  Alignment alignment;
  alignment.policy = policy;
  alignment.permutation.resize(m);

  switch (policy) {
    case AlignmentPolicy::identity:
      std::iota(alignment.permutation.begin(), alignment.permutation.end(), 0);
      break;
    case AlignmentPolicy::sorted_prediction: {
      const std::vector<double> pe = model(explicand.values());
      const std::vector<double> pb = model(baseline.values());
      const std::vector<int> explicand_order = rank_order(pe);
      const std::vector<int> baseline_order = rank_order(pb);
      for (int rank = 0; rank < m; ++rank) {
        alignment.permutation[explicand_order[rank]] = baseline_order[rank];
      }
      break;
    }
    case AlignmentPolicy::sampled: {
      std::iota(alignment.permutation.begin(), alignment.permutation.end(), 0);
      auto rng = detail::stream(seed, 0);
      detail::shuffle(std::span<int>(alignment.permutation), rng);
      break;
    }
  }
  return alignment;
}

Sample apply_alignment(const Sample& baseline, const Alignment& alignment) {
  const int m = baseline.m();
  if (static_cast<int>(alignment.permutation.size()) != m) {
    throw InputError("alignment permutation length " +
                     std::to_string(alignment.permutation.size()) +
                     " does not match sample rows " + std::to_string(m));
  }
  Matrix permuted(m, baseline.n());
  std::vector<std::string> row_ids(m);
  for (int i = 0; i < m; ++i) {
    const int src = alignment.permutation[i];
    if (src < 0 || src >= m) throw InputError("alignment permutation is not a bijection");
    std::copy(baseline.values().row(src).begin(), baseline.values().row(src).end(),
              permuted.row(i).begin());
    row_ids[i] = baseline.row_ids()[src];
  }
  return Sample(std::move(permuted), baseline.feature_names(), std::move(row_ids));
}

AlignmentPolicy default_alignment(DriftMetricId metric) {
  return metric == DriftMetricId::w1 ? AlignmentPolicy::sorted_prediction
                                     : AlignmentPolicy::identity;
}

}  // namespace driftshap
