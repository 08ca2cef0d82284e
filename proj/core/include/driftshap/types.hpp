// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "driftshap/error.hpp"
#include "driftshap/matrix.hpp"

namespace driftshap {

// ---------------------------------------------------------------------------
// Drift metrics
// ---------------------------------------------------------------------------

enum class DriftMetricId { w1, evd, jsd, ks };

// Which distributional axioms each metric satisfies. Fixed per metric; the
// axiom checker verifies the observable ones empirically.
struct MetricCapabilities {
  bool sensitive = false;
  bool differentiable = false;
  bool symmetric = false;
  bool identity_of_indiscernibles = false;
  bool directional = false;
};

MetricCapabilities capabilities(DriftMetricId metric);
std::string_view to_string(DriftMetricId metric);
std::optional<DriftMetricId> metric_from_string(std::string_view name);

// ---------------------------------------------------------------------------
// Samples and predictions
// ---------------------------------------------------------------------------

// An m x n block of feature values with named features and row identifiers.
// Immutable after construction; construction validates every invariant:
// m >= 1, n >= 1, all values finite, feature names unique.
class Sample {
 public:
  Sample(Matrix values, std::vector<std::string> feature_names,
         std::vector<std::string> row_ids = {});

  const Matrix& values() const { return values_; }
  int m() const { return values_.rows(); }
  int n() const { return values_.cols(); }
  const std::vector<std::string>& feature_names() const { return feature_names_; }
  const std::vector<std::string>& row_ids() const { return row_ids_; }

  int feature_index(std::string_view name) const;  // -1 when absent

 private:
  Matrix values_;
  std::vector<std::string> feature_names_;
  std::vector<std::string> row_ids_;
};

enum class PredictionSource { explicand, baseline, hybrid };

// Model outputs for one sample; length always equals the sample's row count.
struct PredictionVector {
  std::vector<double> values;
  PredictionSource source = PredictionSource::hybrid;

  // Validates finiteness and the expected length (-1 skips the length check).
  static PredictionVector checked(std::vector<double> values, PredictionSource source,
                                  int expected_length = -1);
};

// ---------------------------------------------------------------------------
// Groups
// ---------------------------------------------------------------------------

// One attribution player: the cross section (rows x features) of a sample.
struct Group {
  std::string name;
  std::vector<int> rows;      // sorted, unique
  std::vector<int> features;  // sorted, unique
};

// An ordered partition of all m x n cells into named groups. Construction
// rejects empty, overlapping, or non-covering group sets; a partition is what
// makes the attributions sum to the total drift.
class GroupSpec {
 public:
  GroupSpec(std::vector<Group> groups, int m, int n);

  const std::vector<Group>& groups() const { return groups_; }
  int size() const { return static_cast<int>(groups_.size()); }
  int m() const { return m_; }
  int n() const { return n_; }

  static GroupSpec per_feature(const Sample& sample);
  // One group per distinct row label (label order = first appearance).
  static GroupSpec per_row_label(const Sample& sample, const std::vector<std::string>& labels,
                                 const std::string& name_prefix);
  // Cross product: one group per (feature, row label) pair.
  static GroupSpec cross(const Sample& sample, const std::vector<std::string>& labels,
                         const std::string& name_prefix);

 private:
  std::vector<Group> groups_;
  int m_ = 0;
  int n_ = 0;
};

// ---------------------------------------------------------------------------
// Attribution reports
// ---------------------------------------------------------------------------

enum class AttributionMethod { shapley_exact, shapley_sampled, group_ig };
enum class AlignmentPolicy { sorted_prediction, identity, sampled };

std::string_view to_string(AttributionMethod method);
std::optional<AttributionMethod> method_from_string(std::string_view name);
std::string_view to_string(AlignmentPolicy policy);
std::optional<AlignmentPolicy> alignment_from_string(std::string_view name);

struct EstimatorMeta {
  uint64_t seed = 0;
  std::optional<int> permutations;              // sampled Shapley
  std::optional<double> pre_correction_residual;  // sampled Shapley, before the residual split
  std::optional<int> steps;                     // path integration
  std::optional<double> fd_epsilon;             // path integration
  std::optional<int> alignment_samples;         // averaged sampled alignments
};

struct GroupAttribution {
  std::string name;
  double value = 0.0;
  std::optional<double> ci_low;
  std::optional<double> ci_high;
};

struct AttributionReport {
  std::vector<GroupAttribution> per_group;
  double total_drift = 0.0;
  DriftMetricId metric = DriftMetricId::w1;
  AttributionMethod method = AttributionMethod::shapley_exact;
  AlignmentPolicy alignment = AlignmentPolicy::identity;
  EstimatorMeta estimator;
  std::optional<double> confidence_level;

  double attribution_sum() const;
};

// ---------------------------------------------------------------------------
// Pair validation
// ---------------------------------------------------------------------------

struct ValidatedPair {
  Sample explicand;
  Sample baseline;
};

// Checks that the two samples agree in shape and feature names. Finiteness is
// already a Sample invariant. Throws InputError naming the offending index.
ValidatedPair validate_pair(Sample explicand, Sample baseline);

}  // namespace driftshap
