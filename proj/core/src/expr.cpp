// SPDX-License-Identifier: Apache-2.0
#include "driftshap/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <sstream>

namespace driftshap::expr {

namespace {

struct Token {
  enum class Kind { number, ident, plus, minus, star, slash, caret, lparen, rparen, comma, end };
  Kind kind;
  size_t position;
  double number = 0.0;
  std::string text;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    const size_t start = pos_;
    if (pos_ >= src_.size()) return {Token::Kind::end, start};
    const char c = src_[pos_];
    switch (c) {
      case '+': ++pos_; return {Token::Kind::plus, start};
      case '-': ++pos_; return {Token::Kind::minus, start};
      case '*': ++pos_; return {Token::Kind::star, start};
      case '/': ++pos_; return {Token::Kind::slash, start};
      case '^': ++pos_; return {Token::Kind::caret, start};
      case '(': ++pos_; return {Token::Kind::lparen, start};
      case ')': ++pos_; return {Token::Kind::rparen, start};
      case ',': ++pos_; return {Token::Kind::comma, start};
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return lex_number(start);
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
        ++pos_;
      }
      Token t{Token::Kind::ident, start};
      t.text = std::string(src_.substr(start, pos_ - start));
      return t;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", start);
  }

 private:
  Token lex_number(size_t start) {
    size_t end = pos_;
    bool seen_digit = false;
    while (end < src_.size() && std::isdigit(static_cast<unsigned char>(src_[end]))) {
      ++end;
      seen_digit = true;
    }
    if (end < src_.size() && src_[end] == '.') {
      ++end;
      while (end < src_.size() && std::isdigit(static_cast<unsigned char>(src_[end]))) {
        ++end;
        seen_digit = true;
      }
    }
    if (!seen_digit) throw ParseError("malformed number", start);
    if (end < src_.size() && (src_[end] == 'e' || src_[end] == 'E')) {
      size_t exp = end + 1;
      if (exp < src_.size() && (src_[exp] == '+' || src_[exp] == '-')) ++exp;
      if (exp < src_.size() && std::isdigit(static_cast<unsigned char>(src_[exp]))) {
        ++exp;
        while (exp < src_.size() && std::isdigit(static_cast<unsigned char>(src_[exp]))) ++exp;
        end = exp;
      }
    }
    const std::string text(src_.substr(start, end - start));
    char* parse_end = nullptr;
    const double value = std::strtod(text.c_str(), &parse_end);
    if (parse_end != text.c_str() + text.size() || !std::isfinite(value)) {
      throw ParseError("malformed number '" + text + "'", start);
    }
    pos_ = end;
    Token t{Token::Kind::number, start};
    t.number = value;
    t.text = text;
    return t;
  }

  std::string_view src_;
  size_t pos_ = 0;
};

std::unique_ptr<Node> make_node(NodeKind kind) {
  auto node = std::make_unique<Node>();
  node->kind = kind;
  return node;
}

class Parser {
 public:
  Parser(std::string_view src, const std::vector<std::string>& features)
      : lexer_(src), features_(features) {
    advance();
  }

  std::unique_ptr<Node> parse() {
    auto root = parse_sum();
    expect(Token::Kind::end, "unexpected trailing input");
    return root;
  }

 private:
  void advance() { current_ = lexer_.next(); }

  void expect(Token::Kind kind, const char* message) {
    if (current_.kind != kind) throw ParseError(message, current_.position);
    advance();
  }

  std::unique_ptr<Node> parse_sum() {
    auto lhs = parse_product();
    while (current_.kind == Token::Kind::plus || current_.kind == Token::Kind::minus) {
      const NodeKind op = current_.kind == Token::Kind::plus ? NodeKind::add : NodeKind::sub;
      advance();
      auto node = make_node(op);
      node->lhs = std::move(lhs);
      node->rhs = parse_product();
      lhs = std::move(node);
    }
    return lhs;
  }

  std::unique_ptr<Node> parse_product() {
    auto lhs = parse_unary();
    while (current_.kind == Token::Kind::star || current_.kind == Token::Kind::slash) {
      const NodeKind op = current_.kind == Token::Kind::star ? NodeKind::mul : NodeKind::div;
      advance();
      auto node = make_node(op);
      node->lhs = std::move(lhs);
      node->rhs = parse_unary();
      lhs = std::move(node);
    }
    return lhs;
  }

  std::unique_ptr<Node> parse_unary() {
    if (current_.kind == Token::Kind::minus) {
      advance();
      auto node = make_node(NodeKind::negate);
      node->lhs = parse_unary();
      return node;
    }
    return parse_power();
  }

  // The exponent must be an integer literal; it binds tighter than unary
  // minus, so -x^2 negates the power.
  std::unique_ptr<Node> parse_power() {
    auto base = parse_primary();
    while (current_.kind == Token::Kind::caret) {
      advance();
      bool negative = false;
      if (current_.kind == Token::Kind::minus) {
        negative = true;
        advance();
      }
      if (current_.kind != Token::Kind::number) {
        throw ParseError("exponent must be an integer literal", current_.position);
      }
      const Token literal = current_;
      if (literal.text.find_first_of(".eE") != std::string::npos ||
          literal.number != std::floor(literal.number)) {
        throw ParseError("exponent must be an integer, got '" + literal.text + "'",
                         literal.position);
      }
      advance();
      auto node = make_node(NodeKind::pow);
      node->lhs = std::move(base);
      node->exponent = static_cast<long long>(literal.number) * (negative ? -1 : 1);
      base = std::move(node);
    }
    return base;
  }

  std::unique_ptr<Node> parse_primary() {
    switch (current_.kind) {
      case Token::Kind::number: {
        auto node = make_node(NodeKind::literal);
        node->literal = current_.number;
        advance();
        return node;
      }
      case Token::Kind::lparen: {
        advance();
        auto node = parse_sum();
        expect(Token::Kind::rparen, "expected ')'");
        return node;
      }
      case Token::Kind::ident:
        return parse_ident();
      default:
        throw ParseError("expected a value", current_.position);
    }
  }

  std::unique_ptr<Node> parse_ident() {
    const Token ident = current_;
    advance();
    if (current_.kind == Token::Kind::lparen) {
      NodeKind kind;
      int arity;
      if (ident.text == "min") { kind = NodeKind::min; arity = 2; }
      else if (ident.text == "max") { kind = NodeKind::max; arity = 2; }
      else if (ident.text == "abs") { kind = NodeKind::abs; arity = 1; }
      else throw ParseError("unknown function '" + ident.text + "'", ident.position);
      advance();
      auto node = make_node(kind);
      node->lhs = parse_sum();
      if (arity == 2) {
        expect(Token::Kind::comma, "expected ','");
        node->rhs = parse_sum();
      }
      expect(Token::Kind::rparen, "expected ')'");
      return node;
    }
    for (size_t j = 0; j < features_.size(); ++j) {
      if (features_[j] == ident.text) {
        auto node = make_node(NodeKind::variable);
        node->variable = static_cast<int>(j);
        return node;
      }
    }
    throw ParseError("unknown identifier '" + ident.text + "'", ident.position);
  }

  Lexer lexer_;
  Token current_{Token::Kind::end, 0};
  const std::vector<std::string>& features_;
};

void flatten(const Node& node, std::vector<Expr::Instruction>& tape) {
  if (node.lhs) flatten(*node.lhs, tape);
  if (node.rhs) flatten(*node.rhs, tape);
  Expr::Instruction inst{node.kind};
  inst.literal = node.literal;
  inst.variable = node.variable;
  inst.exponent = node.exponent;
  tape.push_back(inst);
}

std::unique_ptr<Node> clone(const Node& node) {
  auto copy = std::make_unique<Node>();
  copy->kind = node.kind;
  copy->literal = node.literal;
  copy->variable = node.variable;
  copy->exponent = node.exponent;
  if (node.lhs) copy->lhs = clone(*node.lhs);
  if (node.rhs) copy->rhs = clone(*node.rhs);
  return copy;
}

void print_node(const Node& node, const std::vector<std::string>& features, std::ostream& out);

void print_operand(const Node& node, const std::vector<std::string>& features, std::ostream& out) {
  if (node.kind == NodeKind::literal || node.kind == NodeKind::variable) {
    print_node(node, features, out);
  } else {
    out << '(';
    print_node(node, features, out);
    out << ')';
  }
}

void print_node(const Node& node, const std::vector<std::string>& features, std::ostream& out) {
  switch (node.kind) {
    case NodeKind::literal: {
      std::ostringstream s;
      s.precision(17);
      s << node.literal;
      std::string text = s.str();
      if (text[0] == '-') {
        out << "(0 - " << text.substr(1) << ')';  // keep literals sign-free so reparse matches
      } else {
        out << text;
      }
      return;
    }
    case NodeKind::variable: out << features[node.variable]; return;
    case NodeKind::negate:
      out << '-';
      print_operand(*node.lhs, features, out);
      return;
    case NodeKind::add:
    case NodeKind::sub:
    case NodeKind::mul:
    case NodeKind::div: {
      const char* op = node.kind == NodeKind::add   ? " + "
                       : node.kind == NodeKind::sub ? " - "
                       : node.kind == NodeKind::mul ? " * "
                                                    : " / ";
      print_operand(*node.lhs, features, out);
      out << op;
      print_operand(*node.rhs, features, out);
      return;
    }
    case NodeKind::pow:
      print_operand(*node.lhs, features, out);
      out << '^' << node.exponent;
      return;
    case NodeKind::min:
    case NodeKind::max:
      out << (node.kind == NodeKind::min ? "min(" : "max(");
      print_node(*node.lhs, features, out);
      out << ", ";
      print_node(*node.rhs, features, out);
      out << ')';
      return;
    case NodeKind::abs:
      out << "abs(";
      print_node(*node.lhs, features, out);
      out << ')';
      return;
  }
}

double integer_power(double base, long long exponent, int row) {
  const bool negative = exponent < 0;
  unsigned long long k = negative ? static_cast<unsigned long long>(-exponent)
                                  : static_cast<unsigned long long>(exponent);
  double result = 1.0;
  double factor = base;
  while (k > 0) {
    if (k & 1ULL) result *= factor;
    factor *= factor;
    k >>= 1ULL;
  }
  if (negative) {
    if (result == 0.0) throw EvalError("division by zero at row " + std::to_string(row));
    result = 1.0 / result;
  }
  return result;
}

}  // namespace

Expr::Expr(std::unique_ptr<Node> root, std::vector<std::string> feature_names)
    : root_(std::move(root)), feature_names_(std::move(feature_names)) {
  flatten(*root_, tape_);
}

Expr::Expr(const Expr& other)
    : root_(clone(*other.root_)), feature_names_(other.feature_names_), tape_(other.tape_) {}

Expr& Expr::operator=(const Expr& other) {
  if (this != &other) {
    root_ = clone(*other.root_);
    feature_names_ = other.feature_names_;
    tape_ = other.tape_;
  }
  return *this;
}

Expr parse_expr(std::string_view source, std::vector<std::string> feature_names) {
  Parser parser(source, feature_names);
  return Expr(parser.parse(), std::move(feature_names));
}

std::vector<double> eval_expr(const Expr& expr, const Matrix& batch) {
  if (batch.cols() != static_cast<int>(expr.feature_names().size())) {
    throw InputError("batch has " + std::to_string(batch.cols()) + " columns, expression expects " +
                     std::to_string(expr.feature_names().size()));
  }
  const auto& tape = expr.tape();
  std::vector<double> out(batch.rows());
  std::vector<double> stack(tape.size());
  for (int i = 0; i < batch.rows(); ++i) {
    const std::span<const double> row = batch.row(i);
    size_t top = 0;
    for (const auto& inst : tape) {
      switch (inst.op) {
        case NodeKind::literal: stack[top++] = inst.literal; break;
        case NodeKind::variable: stack[top++] = row[inst.variable]; break;
        case NodeKind::negate: stack[top - 1] = -stack[top - 1]; break;
        case NodeKind::add: --top; stack[top - 1] += stack[top]; break;
        case NodeKind::sub: --top; stack[top - 1] -= stack[top]; break;
        case NodeKind::mul: --top; stack[top - 1] *= stack[top]; break;
        case NodeKind::div:
          --top;
          if (stack[top] == 0.0) throw EvalError("division by zero at row " + std::to_string(i));
          stack[top - 1] /= stack[top];
          break;
        case NodeKind::pow:
          stack[top - 1] = integer_power(stack[top - 1], inst.exponent, i);
          break;
        case NodeKind::min: --top; stack[top - 1] = std::min(stack[top - 1], stack[top]); break;
        case NodeKind::max: --top; stack[top - 1] = std::max(stack[top - 1], stack[top]); break;
        case NodeKind::abs: stack[top - 1] = std::abs(stack[top - 1]); break;
      }
    }
    if (!std::isfinite(stack[0])) {
      throw EvalError("expression evaluated to a non-finite value at row " + std::to_string(i));
    }
    out[i] = stack[0];
  }
  return out;
}

std::string to_string(const Expr& expr) {
  std::ostringstream out;
  print_node(expr.root(), expr.feature_names(), out);
  return out.str();
}

namespace {

bool nodes_equal(const Node* a, const Node* b) {
  if (a == nullptr || b == nullptr) return a == b;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case NodeKind::literal: return a->literal == b->literal;
    case NodeKind::variable: return a->variable == b->variable;
    case NodeKind::pow:
      return a->exponent == b->exponent && nodes_equal(a->lhs.get(), b->lhs.get());
    default:
      return nodes_equal(a->lhs.get(), b->lhs.get()) && nodes_equal(a->rhs.get(), b->rhs.get());
  }
}

}  // namespace

bool structurally_equal(const Expr& a, const Expr& b) {
  return a.feature_names() == b.feature_names() && nodes_equal(&a.root(), &b.root());
}

}  // namespace driftshap::expr
