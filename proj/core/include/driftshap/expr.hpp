// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "driftshap/error.hpp"
#include "driftshap/matrix.hpp"

namespace driftshap::expr {

class ParseError : public InputError {
 public:
  ParseError(const std::string& message, size_t position)
      : InputError(message + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  size_t position() const { return position_; }

 private:
  size_t position_;
};

enum class NodeKind { literal, variable, negate, add, sub, mul, div, pow, min, max, abs };

struct Node {
  NodeKind kind;
  double literal = 0.0;       // literal
  int variable = -1;          // variable: feature index
  long long exponent = 0;     // pow
  std::unique_ptr<Node> lhs;  // also the operand of unary nodes
  std::unique_ptr<Node> rhs;
};

// A parsed arithmetic expression over named features. Holds the syntax tree
// (printing, structural comparison) and a flat postorder instruction tape
// (batch evaluation).
class Expr {
 public:
  Expr(std::unique_ptr<Node> root, std::vector<std::string> feature_names);
  Expr(const Expr& other);
  Expr(Expr&&) noexcept = default;
  Expr& operator=(const Expr&);
  Expr& operator=(Expr&&) noexcept = default;

  const Node& root() const { return *root_; }
  const std::vector<std::string>& feature_names() const { return feature_names_; }

  struct Instruction {
    NodeKind op;
    double literal = 0.0;
    int variable = -1;
    long long exponent = 0;
  };
  const std::vector<Instruction>& tape() const { return tape_; }

 private:
  std::unique_ptr<Node> root_;
  std::vector<std::string> feature_names_;
  std::vector<Instruction> tape_;
};

// Grammar: + - * / with usual precedence, unary minus, ^ with integer literal
// exponent binding tighter than unary minus, min(a,b), max(a,b), abs(a),
// parentheses. Every identifier must be a declared feature name. Binary
// operators associate left to right within a precedence level.
Expr parse_expr(std::string_view source, std::vector<std::string> feature_names);

// Evaluates the expression for every row of the batch. The batch must have
// one column per declared feature. Division by zero and non-finite results
// raise EvalError naming the row.
std::vector<double> eval_expr(const Expr& expr, const Matrix& batch);

// Fully parenthesized rendering; parsing it back yields a structurally
// identical tree.
std::string to_string(const Expr& expr);

bool structurally_equal(const Expr& a, const Expr& b);

}  // namespace driftshap::expr
