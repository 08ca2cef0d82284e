// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "driftshap/types.hpp"

namespace driftshap {

// How unknown category strings are handled when a column schema is closed.
enum class UnknownCategoryPolicy {
  error,             // report offending rows and fail
  encode_zero_warn,  // encode as 0 and record a warning
};

struct ColumnSchema {
  enum class Type { numeric, categorical };
  Type type = Type::categorical;
  // Category -> code is the position in this list. Empty list with an open
  // schema means codes are assigned in first-seen order.
  std::vector<std::string> categories;
  bool closed = false;
  UnknownCategoryPolicy unknown_policy = UnknownCategoryPolicy::error;
};

struct TableSchema {
  std::map<std::string, ColumnSchema> columns;
  std::optional<std::string> period_column;      // excluded from features, used to split
  std::optional<std::string> prediction_column;  // excluded from features, returned as-is
};

struct LoadedTable {
  Sample sample;  // encoded feature matrix
  // Per-row labels of the period column (empty when none was declared).
  std::vector<std::string> period_labels;
  // Period label -> sample restricted to that period, label order = first appearance.
  std::vector<std::pair<std::string, Sample>> period_samples;
  // Category -> code maps actually used, echoed so encoded output stays interpretable.
  std::map<std::string, std::vector<std::string>> category_maps;
  std::vector<double> predictions;  // when a prediction column was declared
  std::vector<std::string> warnings;
};

// Reads a comma-separated file with a mandatory header row. Numeric columns
// pass through, categorical columns are encoded per schema (or first-seen
// integer codes when the schema is open). Cell-level failures report row and
// column.
LoadedTable load_table(const std::string& path, const TableSchema& schema = {});
LoadedTable load_table_stream(std::istream& in, const TableSchema& schema = {},
                              const std::string& origin = "<stream>");

// Stable field order, floats at 17 significant digits; identical reports
// serialize to identical bytes.
std::string write_report_json(const AttributionReport& report);
// One row per group: group,attribution plus ci_low,ci_high when bounds exist.
std::string write_report_csv(const AttributionReport& report);

AttributionReport read_report_json(const std::string& text);

// "%.17g" rendering used everywhere a float crosses a text boundary.
std::string format_double(double value);

}  // namespace driftshap
