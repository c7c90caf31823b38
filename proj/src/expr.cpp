#include "conespec/expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <utility>

namespace conespec {

struct Expr::Node {
  enum class Kind { Const, VarS, VarT, Add, Sub, Mul, Div, Pow, Neg, Min, Max, Exp, Abs };
  Kind kind;
  double value = 0.0;
  std::shared_ptr<const Node> lhs, rhs;
};

namespace {

using Node = Expr::Node;
using NodePtr = std::shared_ptr<const Node>;

NodePtr make(Node::Kind k, NodePtr l = nullptr, NodePtr r = nullptr) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->lhs = std::move(l);
  n->rhs = std::move(r);
  return n;
}

NodePtr make_const(double v) {
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::Const;
  n->value = v;
  return n;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  NodePtr run() {
    auto e = parse_sum();
    skip_ws();
    if (pos_ != text_.size()) throw ExprParseError("unexpected trailing input", pos_);
    return e;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  NodePtr parse_sum() {
    auto lhs = parse_product();
    for (;;) {
      if (eat('+'))
        lhs = make(Node::Kind::Add, lhs, parse_product());
      else if (eat('-'))
        lhs = make(Node::Kind::Sub, lhs, parse_product());
      else
        return lhs;
    }
  }

  NodePtr parse_product() {
    auto lhs = parse_unary();
    for (;;) {
      if (eat('*'))
        lhs = make(Node::Kind::Mul, lhs, parse_unary());
      else if (eat('/'))
        lhs = make(Node::Kind::Div, lhs, parse_unary());
      else
        return lhs;
    }
  }

  NodePtr parse_unary() {
    if (eat('-')) return make(Node::Kind::Neg, parse_unary());
    return parse_power();
  }

  NodePtr parse_power() {
    auto base = parse_primary();
    if (eat('^')) return make(Node::Kind::Pow, base, parse_unary());  // right assoc
    return base;
  }

  NodePtr parse_primary() {
    skip_ws();
    if (pos_ >= text_.size()) throw ExprParseError("expected an operand", pos_);
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      auto e = parse_sum();
      if (!eat(')')) throw ExprParseError("expected ')'", pos_);
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_ident();
    throw ExprParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  NodePtr parse_number() {
    double v = 0.0;
    const char* begin = text_.data() + pos_;
    const char* end = text_.data() + text_.size();
    auto [p, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc{}) throw ExprParseError("malformed number", pos_);
    pos_ = static_cast<std::size_t>(p - text_.data());
    return make_const(v);
  }

  NodePtr parse_ident() {
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    std::string_view name = text_.substr(start, pos_ - start);
    if (name == "s") return make(Node::Kind::VarS);
    if (name == "t") return make(Node::Kind::VarT);
    if (name == "min" || name == "max") {
      auto [a, b] = parse_two_args(start);
      return make(name == "min" ? Node::Kind::Min : Node::Kind::Max, a, b);
    }
    if (name == "exp" || name == "abs") {
      if (!eat('(')) throw ExprParseError("expected '(' after function name", pos_);
      auto a = parse_sum();
      if (!eat(')')) throw ExprParseError("expected ')'", pos_);
      return make(name == "exp" ? Node::Kind::Exp : Node::Kind::Abs, a);
    }
    throw ExprParseError("unknown identifier '" + std::string(name) + "'", start);
  }

  std::pair<NodePtr, NodePtr> parse_two_args(std::size_t at) {
    if (!eat('(')) throw ExprParseError("expected '(' after function name", pos_);
    auto a = parse_sum();
    if (!eat(',')) throw ExprParseError("expected ','", pos_);
    auto b = parse_sum();
    if (!eat(')')) throw ExprParseError("expected ')'", pos_);
    (void)at;
    return {a, b};
  }
};

double eval_node(const Node& n, double s, double t) {
  using K = Node::Kind;
  switch (n.kind) {
    case K::Const: return n.value;
    case K::VarS: return s;
    case K::VarT: return t;
    case K::Add: return eval_node(*n.lhs, s, t) + eval_node(*n.rhs, s, t);
    case K::Sub: return eval_node(*n.lhs, s, t) - eval_node(*n.rhs, s, t);
    case K::Mul: return eval_node(*n.lhs, s, t) * eval_node(*n.rhs, s, t);
    case K::Div: return eval_node(*n.lhs, s, t) / eval_node(*n.rhs, s, t);
    case K::Pow: return std::pow(eval_node(*n.lhs, s, t), eval_node(*n.rhs, s, t));
    case K::Neg: return -eval_node(*n.lhs, s, t);
    case K::Min: return std::min(eval_node(*n.lhs, s, t), eval_node(*n.rhs, s, t));
    case K::Max: return std::max(eval_node(*n.lhs, s, t), eval_node(*n.rhs, s, t));
    case K::Exp: return std::exp(eval_node(*n.lhs, s, t));
    case K::Abs: return std::abs(eval_node(*n.lhs, s, t));
  }
  return 0.0;
}

bool uses_t(const Node& n) {
  if (n.kind == Node::Kind::VarT) return true;
  if (n.lhs && uses_t(*n.lhs)) return true;
  if (n.rhs && uses_t(*n.rhs)) return true;
  return false;
}

}  // namespace

Expr Expr::parse(std::string_view text) {
  Expr e;
  e.text_ = std::string(text);
  e.root_ = Parser(text).run();
  return e;
}

double Expr::eval(double s, double t) const { return eval_node(*root_, s, t); }

bool Expr::depends_on_t() const { return uses_t(*root_); }

}  // namespace conespec
