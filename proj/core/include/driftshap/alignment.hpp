// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "driftshap/model.hpp"
#include "driftshap/types.hpp"

namespace driftshap {

// Row pairing between explicand and baseline. permutation[i] is the baseline
// row standing in for explicand row i whenever that row's cells are "absent".
struct Alignment {
  std::vector<int> permutation;  // bijection on 0..m-1
  AlignmentPolicy policy = AlignmentPolicy::identity;
};

// sorted_prediction: rank both samples by model prediction (stable, ties by
// row index) and pair equal ranks; realizes the 1-D optimal transport plan
// between the two prediction samples. identity: row i with row i. sampled: a
// uniformly random permutation drawn from the seeded generator.
Alignment align(const Sample& explicand, const Sample& baseline, const ModelFn& model,
                AlignmentPolicy policy, uint64_t seed = 0);

// The baseline with rows permuted so that row i pairs with explicand row i.
Sample apply_alignment(const Sample& baseline, const Alignment& alignment);

// sorted_prediction pairs with the optimal-transport reading of the
// Wasserstein metric; the other metrics have no preferred pairing.
AlignmentPolicy default_alignment(DriftMetricId metric);

}  // namespace driftshap
