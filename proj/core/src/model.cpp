// SPDX-License-Identifier: Apache-2.0
#include "driftshap/model.hpp"

#include <cmath>
#include <memory>
#include <utility>

namespace driftshap {

std::vector<double> ModelFn::operator()(const Matrix& batch) const {
  if (!evaluate) throw InputError("model '" + name + "' has no evaluator");
  std::vector<double> out = evaluate(batch);
  if (static_cast<int>(out.size()) != batch.rows()) {
    throw EvalError("model '" + name + "' returned " + std::to_string(out.size()) +
                    " predictions for " + std::to_string(batch.rows()) + " rows");
  }
  for (size_t i = 0; i < out.size(); ++i) {
    if (!std::isfinite(out[i])) {
      throw EvalError("model '" + name + "' returned a non-finite prediction at row " +
                      std::to_string(i));
    }
  }
  return out;
}

PredictionVector ModelFn::predict(const Sample& sample, PredictionSource source) const {
  return PredictionVector::checked((*this)(sample.values()), source, sample.m());
}

ModelFn make_expr_model(expr::Expr parsed) {
  auto shared = std::make_shared<expr::Expr>(std::move(parsed));
  ModelFn model;
  model.name = expr::to_string(*shared);
  model.evaluate = [shared](const Matrix& batch) { return expr::eval_expr(*shared, batch); };
  return model;
}

ModelFn make_expr_model(std::string_view source, std::vector<std::string> feature_names) {
  return make_expr_model(expr::parse_expr(source, std::move(feature_names)));
}

ModelFn select_output(std::function<Matrix(const Matrix&)> multi_output, int column,
                      std::string name) {
  ModelFn model;
  model.name = std::move(name);
  model.evaluate = [multi_output = std::move(multi_output), column](const Matrix& batch) {
    const Matrix outputs = multi_output(batch);
    if (outputs.rows() != batch.rows()) {
      throw EvalError("multi-output model returned " + std::to_string(outputs.rows()) +
                      " rows for " + std::to_string(batch.rows()) + " inputs");
    }
    if (column < 0 || column >= outputs.cols()) {
      throw InputError("output column " + std::to_string(column) + " out of range [0," +
                       std::to_string(outputs.cols()) + ")");
    }
    std::vector<double> selected(outputs.rows());
    for (int i = 0; i < outputs.rows(); ++i) selected[i] = outputs(i, column);
    return selected;
  };
  return model;
}

std::optional<std::string> builtin_expression(std::string_view name) {
  if (name == "table2:xy") return "x*y";
  if (name == "table2:x-y") return "x - y";
  if (name == "table2:x+y-z") return "x + y - z";
  if (name == "table2:xy-z2") return "x*y - z^2";
  if (name == "table2:min") return "min(x, y)";
  if (name == "table2:abs") return "abs(x - y)";
  if (name == "table1") return "x*z + y + z";
  return std::nullopt;
}

}  // namespace driftshap
