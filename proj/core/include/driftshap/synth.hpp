// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "driftshap/io.hpp"
#include "driftshap/model.hpp"
#include "driftshap/types.hpp"

namespace driftshap {

// An injectable data defect.
struct DriftInjection {
  enum class Kind {
    // Location strings arrive as "springfield" instead of "Springfield";
    // the closed encoder maps the unknown string to 0, so every affected row
    // reads as Centerville.
    location_case_bug,
    // Multiply one numeric feature by `multiplier`.
    feature_spike,
  };
  Kind kind = Kind::location_case_bug;
  std::string feature;      // feature_spike only
  double multiplier = 1.0;  // feature_spike only, > 0
};

struct ScheduledInjection {
  int first_period = 0;
  int last_period = 0;  // inclusive
  DriftInjection injection;
};

struct SalaryGenConfig {
  int rows_per_period = 2000;
  int periods = 3;
  uint64_t seed = 0;
  std::vector<ScheduledInjection> schedule;
};

struct RawSalaryRecord {
  std::string location;
  std::string education;
  double experience = 0.0;
  std::string engineer_type;
  double relevant_experience = 0.0;
  int period = 0;
};

struct SalaryDataset {
  std::vector<RawSalaryRecord> records;
  Sample full;                          // all rows, encoded
  std::vector<Sample> period_samples;   // encoded, one per period
  std::vector<std::string> period_labels;  // per row: "0", "1", ...
  std::vector<std::string> warnings;    // unknown-category encodings
};

// Synthetic salary population: Location 70:30 Springfield:Centerville,
// Education 80:20 GRAD:POST_GRAD, Engineer Type 85:15 Software:Hardware,
// Experience and Relevant Experience normal(15, 10) truncated to [0, 50]
// by resampling, with relevant <= experience enforced. Deterministic for a
// given seed.
SalaryDataset generate(const SalaryGenConfig& cfg);

// Encoded feature order expected by the salary model.
const std::vector<std::string>& salary_feature_names();

// 50000 + 20000*location + 20000*education + 5000*relevant_experience
// + 100*experience + 10000*engineer_type on the encoded 5-feature input.
ModelFn salary_model();

// Closed categorical schema for salary CSV files: Centerville=0/Springfield=1,
// GRAD=0/POST_GRAD=1, Hardware=0/Software=1, unknown categories encode to 0
// with a warning, period column "day".
TableSchema salary_schema();

// Header row plus one line per record: raw categoricals, numeric features,
// and the period under column "day".
void write_salary_csv(const SalaryDataset& dataset, std::ostream& out);

}  // namespace driftshap
