#ifndef SVFRACTAL_EXPR_HPP
#define SVFRACTAL_EXPR_HPP

#include <memory>
#include <string>

namespace svf {

// Scalar expression in one variable t.  Supports + - * / ^ (right
// associative), unary minus, parentheses and the functions
// sin, cos, exp, abs, sqrt.
class Expr {
public:
  struct Node;

  // Throws SyntaxError / UnknownIdentifier with a byte offset.
  static Expr parse(const std::string& text);

  // Throws NonFiniteResult when the value is NaN or infinite.
  double eval(double t) const;

  // Parenthesized round-trippable form.
  std::string print() const;

  // True when the expression is syntactically the constant 1 after folding.
  bool is_constant(double* value = nullptr) const;

private:
  explicit Expr(std::shared_ptr<const Node> root) : root_(std::move(root)) {}
  std::shared_ptr<const Node> root_;
};

}  // namespace svf

#endif
