#include "svfractal/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <sstream>
#include <vector>

#include "svfractal/errors.hpp"

namespace svf {

enum class Op {
  Literal,
  Var,
  Add,
  Sub,
  Mul,
  Div,
  Pow,
  Neg,
  Sin,
  Cos,
  Exp,
  Abs,
  Sqrt,
};

struct Expr::Node {
  Op op;
  double value = 0.0;  // Literal only
  std::shared_ptr<const Node> lhs, rhs;
};

namespace {

using NodePtr = std::shared_ptr<const Expr::Node>;

NodePtr make(Op op, NodePtr lhs = nullptr, NodePtr rhs = nullptr) {
  auto n = std::make_shared<Expr::Node>();
  n->op = op;
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  return n;
}

NodePtr literal(double v) {
  auto n = std::make_shared<Expr::Node>();
  n->op = Op::Literal;
  n->value = v;
  return n;
}

class Parser {
public:
  explicit Parser(const std::string& text) : text_(text) {}

  NodePtr run() {
    NodePtr e = parse_sum();
    skip_ws();
    if (pos_ != text_.size())
      throw SyntaxError("unexpected trailing input", pos_);
    return e;
  }

private:
  // sum     := product (('+'|'-') product)*
  // product := unary (('*'|'/') unary)*
  // unary   := '-' unary | power
  // power   := atom ('^' unary)?          (right associative)
  // atom    := number | 't' | ident '(' sum ')' | '(' sum ')'
  NodePtr parse_sum() {
    NodePtr lhs = parse_product();
    for (;;) {
      skip_ws();
      if (accept('+'))
        lhs = make(Op::Add, lhs, parse_product());
      else if (accept('-'))
        lhs = make(Op::Sub, lhs, parse_product());
      else
        return lhs;
    }
  }

  NodePtr parse_product() {
    NodePtr lhs = parse_unary();
    for (;;) {
      skip_ws();
      if (accept('*'))
        lhs = make(Op::Mul, lhs, parse_unary());
      else if (accept('/'))
        lhs = make(Op::Div, lhs, parse_unary());
      else
        return lhs;
    }
  }

  NodePtr parse_unary() {
    skip_ws();
    if (accept('-')) return make(Op::Neg, parse_unary());
    return parse_power();
  }

  NodePtr parse_power() {
    NodePtr base = parse_atom();
    skip_ws();
    if (accept('^')) return make(Op::Pow, base, parse_unary());
    return base;
  }

  NodePtr parse_atom() {
    skip_ws();
    if (pos_ >= text_.size()) throw SyntaxError("unexpected end of input", pos_);
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.')
      return parse_number();
    if (std::isalpha(static_cast<unsigned char>(c))) return parse_ident();
    if (accept('(')) {
      NodePtr e = parse_sum();
      expect(')');
      return e;
    }
    throw SyntaxError(std::string("unexpected character '") + c + "'", pos_);
  }

  NodePtr parse_number() {
    const char* start = text_.c_str() + pos_;
    char* end = nullptr;
    const double v = std::strtod(start, &end);
    if (end == start) throw SyntaxError("malformed number", pos_);
    pos_ += static_cast<std::size_t>(end - start);
    return literal(v);
  }

  NodePtr parse_ident() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isalpha(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    const std::string name = text_.substr(start, pos_ - start);
    if (name == "t") return make(Op::Var);
    if (name == "pi") return literal(M_PI);
    Op op;
    if (name == "sin")
      op = Op::Sin;
    else if (name == "cos")
      op = Op::Cos;
    else if (name == "exp")
      op = Op::Exp;
    else if (name == "abs")
      op = Op::Abs;
    else if (name == "sqrt")
      op = Op::Sqrt;
    else
      throw UnknownIdentifier(name, start);
    skip_ws();
    expect('(');
    NodePtr arg = parse_sum();
    expect(')');
    return make(op, arg);
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool accept(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    skip_ws();
    if (!accept(c))
      throw SyntaxError(std::string("expected '") + c + "'", pos_);
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

double eval_node(const Expr::Node& n, double t) {
  switch (n.op) {
    case Op::Literal: return n.value;
    case Op::Var: return t;
    case Op::Add: return eval_node(*n.lhs, t) + eval_node(*n.rhs, t);
    case Op::Sub: return eval_node(*n.lhs, t) - eval_node(*n.rhs, t);
    case Op::Mul: return eval_node(*n.lhs, t) * eval_node(*n.rhs, t);
    case Op::Div: return eval_node(*n.lhs, t) / eval_node(*n.rhs, t);
    case Op::Pow: return std::pow(eval_node(*n.lhs, t), eval_node(*n.rhs, t));
    case Op::Neg: return -eval_node(*n.lhs, t);
    case Op::Sin: return std::sin(eval_node(*n.lhs, t));
    case Op::Cos: return std::cos(eval_node(*n.lhs, t));
    case Op::Exp: return std::exp(eval_node(*n.lhs, t));
    case Op::Abs: return std::fabs(eval_node(*n.lhs, t));
    case Op::Sqrt: return std::sqrt(eval_node(*n.lhs, t));
  }
  throw Error("corrupt expression node");
}

void print_node(const Expr::Node& n, std::ostringstream& os) {
  auto binary = [&](const char* sym) {
    os << "(";
    print_node(*n.lhs, os);
    os << sym;
    print_node(*n.rhs, os);
    os << ")";
  };
  auto call = [&](const char* name) {
    os << name << "(";
    print_node(*n.lhs, os);
    os << ")";
  };
  switch (n.op) {
    case Op::Literal: {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.17g", n.value);
      os << buf;
      return;
    }
    case Op::Var: os << "t"; return;
    case Op::Add: binary("+"); return;
    case Op::Sub: binary("-"); return;
    case Op::Mul: binary("*"); return;
    case Op::Div: binary("/"); return;
    case Op::Pow: binary("^"); return;
    case Op::Neg:
      os << "(-";
      print_node(*n.lhs, os);
      os << ")";
      return;
    case Op::Sin: call("sin"); return;
    case Op::Cos: call("cos"); return;
    case Op::Exp: call("exp"); return;
    case Op::Abs: call("abs"); return;
    case Op::Sqrt: call("sqrt"); return;
  }
}

}  // namespace

Expr Expr::parse(const std::string& text) {
  return Expr(Parser(text).run());
}

double Expr::eval(double t) const {
  const double v = eval_node(*root_, t);
  if (!std::isfinite(v))
    throw NonFiniteResult("expression is not finite at t=" + std::to_string(t));
  return v;
}

std::string Expr::print() const {
  std::ostringstream os;
  print_node(*root_, os);
  return os.str();
}

bool Expr::is_constant(double* value) const {
  // Constant iff evaluation does not reach Op::Var; detect structurally.
  std::vector<const Node*> stack{root_.get()};
  while (!stack.empty()) {
    const Node* n = stack.back();
    stack.pop_back();
    if (n->op == Op::Var) return false;
    if (n->lhs) stack.push_back(n->lhs.get());
    if (n->rhs) stack.push_back(n->rhs.get());
  }
  if (value) *value = eval_node(*root_, 0.0);
  return true;
}

}  // namespace svf
