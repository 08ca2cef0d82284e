// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "driftshap/metrics.hpp"
#include "driftshap/types.hpp"

namespace driftshap {

enum class MetricAxiom { symmetry, identity_of_indiscernibles, sensitivity, directionality };

std::string_view to_string(MetricAxiom axiom);

struct AxiomCheckResult {
  DriftMetricId metric;
  MetricAxiom axiom;
  bool expected;  // from the metric's capability flags
  bool observed;  // from randomized trials / counterexamples
  std::string note;

  bool as_expected() const { return expected == observed; }
};

// Randomized property checks of the four observable axioms, plus the fixed
// counterexamples: expected-value difference on one-vs-{zeros,twos} samples
// (identity fails with equal means) and Jensen-Shannon on translated disjoint
// samples (sensitivity fails at a constant divergence of one). A metric whose
// capability says "fails" must be observed failing.
std::vector<AxiomCheckResult> run_axiom_checks(DriftMetricId metric, int trials, uint64_t seed);

}  // namespace driftshap
