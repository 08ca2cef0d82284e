// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "driftshap/expr.hpp"
#include "driftshap/matrix.hpp"
#include "driftshap/types.hpp"

namespace driftshap {

// A batch-evaluable scalar-output model: matrix of m rows in, m predictions
// out. Evaluators must be deterministic for identical input.
struct ModelFn {
  std::string name;
  std::function<std::vector<double>(const Matrix&)> evaluate;

  // Optional analytic per-row gradient hook (extension point; the path
  // integrator uses finite differences on the composite objective and does
  // not consume it).
  std::function<std::vector<double>(std::span<const double>)> gradient;

  // Evaluates and validates output length and finiteness.
  std::vector<double> operator()(const Matrix& batch) const;
  PredictionVector predict(const Sample& sample, PredictionSource source) const;
};

ModelFn make_expr_model(expr::Expr parsed);
ModelFn make_expr_model(std::string_view source, std::vector<std::string> feature_names);

// Adapter for multi-output models: selects one output column so downstream
// code only ever sees scalar predictions.
ModelFn select_output(std::function<Matrix(const Matrix&)> multi_output, int column,
                      std::string name);

// Named model shortcuts accepted wherever an expression string is (CLI,
// configs). Returns the expression text, or nullopt for unknown names.
// "table2:xy" -> "x*y", "table2:x-y" -> "x - y", "table2:x+y-z",
// "table2:xy-z2" -> "x*y - z^2", "table2:min" -> "min(x, y)",
// "table2:abs" -> "abs(x - y)".
std::optional<std::string> builtin_expression(std::string_view name);

}  // namespace driftshap
