#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "conespec/errors.hpp"

namespace conespec {

/// Parsed arithmetic expression in the variables s and t.
///
/// Grammar: +, -, *, /, ^ with standard precedence (^ binds tightest and is
/// right-associative, everything else left-associative), parentheses, unary
/// minus, and the functions min(a,b), max(a,b), exp(a), abs(a).
class Expr {
 public:
  static Expr parse(std::string_view text);

  double eval(double s, double t = 0.0) const;
  /// True when the expression never references the variable t.
  bool depends_on_t() const;
  const std::string& text() const { return text_; }

  struct Node;

 private:
  std::string text_;
  std::shared_ptr<const Node> root_;
};

}  // namespace conespec
