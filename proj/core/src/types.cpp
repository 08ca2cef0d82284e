// SPDX-License-Identifier: Apache-2.0
#include "driftshap/types.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>
#include <unordered_set>

namespace driftshap {

Matrix::Matrix(int rows, int cols, std::vector<double> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (rows_ < 0 || cols_ < 0 || data_.size() != static_cast<size_t>(rows_) * cols_) {
    throw InputError("matrix data size does not match " + std::to_string(rows_) + "x" +
                     std::to_string(cols_));
  }
}

MetricCapabilities capabilities(DriftMetricId metric) {
  switch (metric) {
    case DriftMetricId::w1:
      return {.sensitive = true, .differentiable = true, .symmetric = true,
              .identity_of_indiscernibles = true, .directional = false};
    case DriftMetricId::evd:
      return {.sensitive = true, .differentiable = true, .symmetric = false,
              .identity_of_indiscernibles = false, .directional = true};
    case DriftMetricId::jsd:
      return {.sensitive = false, .differentiable = false, .symmetric = true,
              .identity_of_indiscernibles = true, .directional = false};
    case DriftMetricId::ks:
      return {.sensitive = false, .differentiable = false, .symmetric = true,
              .identity_of_indiscernibles = true, .directional = false};
  }
  throw std::logic_error("unknown metric");
}

std::string_view to_string(DriftMetricId metric) {
  switch (metric) {
    case DriftMetricId::w1: return "w1";
    case DriftMetricId::evd: return "evd";
    case DriftMetricId::jsd: return "jsd";
    case DriftMetricId::ks: return "ks";
  }
  return "?";
}

std::optional<DriftMetricId> metric_from_string(std::string_view name) {
  if (name == "w1") return DriftMetricId::w1;
  if (name == "evd") return DriftMetricId::evd;
  if (name == "jsd") return DriftMetricId::jsd;
  if (name == "ks") return DriftMetricId::ks;
  return std::nullopt;
}

std::string_view to_string(AttributionMethod method) {
  switch (method) {
    case AttributionMethod::shapley_exact: return "shapley_exact";
    case AttributionMethod::shapley_sampled: return "shapley_sampled";
    case AttributionMethod::group_ig: return "group_ig";
  }
  return "?";
}

std::optional<AttributionMethod> method_from_string(std::string_view name) {
  if (name == "shapley_exact" || name == "shapley") return AttributionMethod::shapley_exact;
  if (name == "shapley_sampled" || name == "shapley-sampled") return AttributionMethod::shapley_sampled;
  if (name == "group_ig" || name == "ig") return AttributionMethod::group_ig;
  return std::nullopt;
}

std::string_view to_string(AlignmentPolicy policy) {
  switch (policy) {
    case AlignmentPolicy::sorted_prediction: return "sorted_prediction";
    case AlignmentPolicy::identity: return "identity";
    case AlignmentPolicy::sampled: return "sampled";
  }
  return "?";
}

std::optional<AlignmentPolicy> alignment_from_string(std::string_view name) {
  if (name == "sorted_prediction" || name == "sorted") return AlignmentPolicy::sorted_prediction;
  if (name == "identity") return AlignmentPolicy::identity;
  if (name == "sampled") return AlignmentPolicy::sampled;
  return std::nullopt;
}

Sample::Sample(Matrix values, std::vector<std::string> feature_names,
               std::vector<std::string> row_ids)
    : values_(std::move(values)),
      feature_names_(std::move(feature_names)),
      row_ids_(std::move(row_ids)) {
  const int m = values_.rows();
  const int n = values_.cols();
  if (m < 1) throw InputError("sample must have at least one row (m=" + std::to_string(m) + ")");
  if (n < 1) throw InputError("sample must have at least one feature (n=" + std::to_string(n) + ")");
  if (static_cast<int>(feature_names_.size()) != n) {
    throw InputError("expected " + std::to_string(n) + " feature names, got " +
                     std::to_string(feature_names_.size()));
  }
  std::unordered_set<std::string_view> seen;
  for (size_t k = 0; k < feature_names_.size(); ++k) {
    if (!seen.insert(feature_names_[k]).second) {
      throw InputError("duplicate feature name '" + feature_names_[k] + "' at index " +
                       std::to_string(k));
    }
  }
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      if (!std::isfinite(values_(i, j))) {
        throw InputError("non-finite value at row " + std::to_string(i) + ", column " +
                         std::to_string(j) + " ('" + feature_names_[j] + "')");
      }
    }
  }
  if (row_ids_.empty()) {
    row_ids_.reserve(m);
    for (int i = 0; i < m; ++i) row_ids_.push_back(std::to_string(i));
  } else if (static_cast<int>(row_ids_.size()) != m) {
    throw InputError("expected " + std::to_string(m) + " row ids, got " +
                     std::to_string(row_ids_.size()));
  }
}

int Sample::feature_index(std::string_view name) const {
  for (size_t j = 0; j < feature_names_.size(); ++j) {
    if (feature_names_[j] == name) return static_cast<int>(j);
  }
  return -1;
}

PredictionVector PredictionVector::checked(std::vector<double> values, PredictionSource source,
                                           int expected_length) {
  if (expected_length >= 0 && static_cast<int>(values.size()) != expected_length) {
    throw InputError("prediction vector length " + std::to_string(values.size()) +
                     " does not match sample rows " + std::to_string(expected_length));
  }
  for (size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i])) {
      throw EvalError("non-finite prediction at row " + std::to_string(i));
    }
  }
  return PredictionVector{std::move(values), source};
}

namespace {

std::vector<int> sorted_unique(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

GroupSpec::GroupSpec(std::vector<Group> groups, int m, int n)
    : groups_(std::move(groups)), m_(m), n_(n) {
  if (m_ < 1 || n_ < 1) throw InputError("group spec needs a sample shape of at least 1x1");
  if (groups_.empty()) throw InputError("group spec must contain at least one group");

  std::unordered_set<std::string_view> names;
  // owner of each cell, -1 = unassigned
  std::vector<int> owner(static_cast<size_t>(m_) * n_, -1);
  for (size_t g = 0; g < groups_.size(); ++g) {
    Group& group = groups_[g];
    if (!names.insert(group.name).second) {
      throw InputError("duplicate group name '" + group.name + "'");
    }
    group.rows = sorted_unique(std::move(group.rows));
    group.features = sorted_unique(std::move(group.features));
    if (group.rows.empty() || group.features.empty()) {
      throw InputError("group '" + group.name + "' has an empty cell set");
    }
    for (int r : group.rows) {
      if (r < 0 || r >= m_)
        throw InputError("group '" + group.name + "' row index " + std::to_string(r) +
                         " out of range [0," + std::to_string(m_) + ")");
    }
    for (int f : group.features) {
      if (f < 0 || f >= n_)
        throw InputError("group '" + group.name + "' feature index " + std::to_string(f) +
                         " out of range [0," + std::to_string(n_) + ")");
    }
    for (int r : group.rows) {
      for (int f : group.features) {
        int& cell = owner[static_cast<size_t>(r) * n_ + f];
        if (cell >= 0) {
          throw InputError("groups '" + groups_[cell].name + "' and '" + group.name +
                           "' overlap at cell (row " + std::to_string(r) + ", feature " +
                           std::to_string(f) + ")");
        }
        cell = static_cast<int>(g);
      }
    }
  }
  for (int r = 0; r < m_; ++r) {
    for (int f = 0; f < n_; ++f) {
      if (owner[static_cast<size_t>(r) * n_ + f] < 0) {
        throw InputError("groups do not cover cell (row " + std::to_string(r) + ", feature " +
                         std::to_string(f) + "); the partition must cover all " +
                         std::to_string(m_) + "x" + std::to_string(n_) + " cells");
      }
    }
  }
}

GroupSpec GroupSpec::per_feature(const Sample& sample) {
  std::vector<Group> groups;
  groups.reserve(sample.n());
  std::vector<int> all_rows(sample.m());
  for (int i = 0; i < sample.m(); ++i) all_rows[i] = i;
  for (int j = 0; j < sample.n(); ++j) {
    groups.push_back(Group{sample.feature_names()[j], all_rows, {j}});
  }
  return GroupSpec(std::move(groups), sample.m(), sample.n());
}

namespace {

std::vector<std::pair<std::string, std::vector<int>>> rows_by_label(
    const std::vector<std::string>& labels) {
  std::vector<std::pair<std::string, std::vector<int>>> blocks;
  std::unordered_map<std::string, size_t> index;
  for (size_t i = 0; i < labels.size(); ++i) {
    auto [it, inserted] = index.try_emplace(labels[i], blocks.size());
    if (inserted) blocks.emplace_back(labels[i], std::vector<int>{});
    blocks[it->second].second.push_back(static_cast<int>(i));
  }
  return blocks;
}

}  // namespace

GroupSpec GroupSpec::per_row_label(const Sample& sample, const std::vector<std::string>& labels,
                                   const std::string& name_prefix) {
  if (static_cast<int>(labels.size()) != sample.m()) {
    throw InputError("row labels size " + std::to_string(labels.size()) +
                     " does not match sample rows " + std::to_string(sample.m()));
  }
  std::vector<int> all_features(sample.n());
  for (int j = 0; j < sample.n(); ++j) all_features[j] = j;
  std::vector<Group> groups;
  for (auto& [label, rows] : rows_by_label(labels)) {
    groups.push_back(Group{name_prefix + "=" + label, rows, all_features});
  }
  return GroupSpec(std::move(groups), sample.m(), sample.n());
}

GroupSpec GroupSpec::cross(const Sample& sample, const std::vector<std::string>& labels,
                           const std::string& name_prefix) {
  if (static_cast<int>(labels.size()) != sample.m()) {
    throw InputError("row labels size " + std::to_string(labels.size()) +
                     " does not match sample rows " + std::to_string(sample.m()));
  }
  std::vector<Group> groups;
  for (auto& [label, rows] : rows_by_label(labels)) {
    for (int j = 0; j < sample.n(); ++j) {
      groups.push_back(Group{sample.feature_names()[j] + "/" + name_prefix + "=" + label,
                             rows, {j}});
    }
  }
  return GroupSpec(std::move(groups), sample.m(), sample.n());
}

double AttributionReport::attribution_sum() const {
  double sum = 0.0;
  for (const auto& g : per_group) sum += g.value;
  return sum;
}

ValidatedPair validate_pair(Sample explicand, Sample baseline) {
  if (explicand.m() != baseline.m() || explicand.n() != baseline.n()) {
    throw InputError("shape mismatch: explicand is " + std::to_string(explicand.m()) + "x" +
                     std::to_string(explicand.n()) + ", baseline is " +
                     std::to_string(baseline.m()) + "x" + std::to_string(baseline.n()));
  }
  for (int j = 0; j < explicand.n(); ++j) {
    if (explicand.feature_names()[j] != baseline.feature_names()[j]) {
      throw InputError("feature name mismatch at index " + std::to_string(j) + ": '" +
                       explicand.feature_names()[j] + "' vs '" + baseline.feature_names()[j] +
                       "'");
    }
  }
  return ValidatedPair{std::move(explicand), std::move(baseline)};
}

}  // namespace driftshap
