#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <memory>
#include <random>
#include <string>

#include "svfractal/errors.hpp"
#include "svfractal/expr.hpp"

using namespace svf;

namespace {

// Independent reference: a tiny AST generator that renders itself to text
// and evaluates itself, so parser and evaluator are checked against a
// second implementation rather than themselves.
struct RefNode {
  enum Kind { Lit, Var, Add, Sub, Mul, Div, Pow, Neg, Sin, Cos, Exp, Abs } kind;
  double lit = 0.0;
  std::shared_ptr<RefNode> a, b;

  double eval(double t) const {
    switch (kind) {
      case Lit: return lit;
      case Var: return t;
      case Add: return a->eval(t) + b->eval(t);
      case Sub: return a->eval(t) - b->eval(t);
      case Mul: return a->eval(t) * b->eval(t);
      case Div: return a->eval(t) / b->eval(t);
      case Pow: return std::pow(a->eval(t), b->eval(t));
      case Neg: return -a->eval(t);
      case Sin: return std::sin(a->eval(t));
      case Cos: return std::cos(a->eval(t));
      case Exp: return std::exp(a->eval(t));
      case Abs: return std::fabs(a->eval(t));
    }
    return 0.0;
  }

  // Fully parenthesized text, so precedence never matters here.
  std::string text() const {
    switch (kind) {
      case Lit: {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17g", lit);
        return lit < 0 ? "(0-" + std::string(buf + 1) + ")" : buf;
      }
      case Var: return "t";
      case Add: return "(" + a->text() + "+" + b->text() + ")";
      case Sub: return "(" + a->text() + "-" + b->text() + ")";
      case Mul: return "(" + a->text() + "*" + b->text() + ")";
      case Div: return "(" + a->text() + "/" + b->text() + ")";
      case Pow: return "(" + a->text() + "^" + b->text() + ")";
      case Neg: return "(-" + a->text() + ")";
      case Sin: return "sin(" + a->text() + ")";
      case Cos: return "cos(" + a->text() + ")";
      case Exp: return "exp(" + a->text() + ")";
      case Abs: return "abs(" + a->text() + ")";
    }
    return "";
  }
};

std::shared_ptr<RefNode> random_ast(std::mt19937_64& rng, int depth) {
  auto node = std::make_shared<RefNode>();
  std::uniform_real_distribution<double> lit(-3.0, 3.0);
  std::uniform_int_distribution<int> leaf(0, 1), op(2, 11);
  if (depth == 0 || std::uniform_int_distribution<int>(0, 3)(rng) == 0) {
    node->kind = leaf(rng) == 0 ? RefNode::Lit : RefNode::Var;
    node->lit = lit(rng);
    return node;
  }
  node->kind = static_cast<RefNode::Kind>(op(rng));
  node->a = random_ast(rng, depth - 1);
  if (node->kind <= RefNode::Pow) node->b = random_ast(rng, depth - 1);
  if (node->kind == RefNode::Pow) {
    // Keep powers tame and real-valued.
    node->a = std::make_shared<RefNode>(
        RefNode{RefNode::Abs, 0.0, node->a, nullptr});
    node->b = std::make_shared<RefNode>(
        RefNode{RefNode::Lit, std::uniform_real_distribution<double>(
                                  0.0, 2.0)(rng), nullptr, nullptr});
  }
  return node;
}

}  // namespace

TEST_CASE("parses the documented examples") {
  CHECK(Expr::parse("t^2+1").eval(2.0) == doctest::Approx(5.0));
  CHECK(Expr::parse("sin(t)*2").eval(0.5) == doctest::Approx(2 * std::sin(0.5)));
  CHECK(Expr::parse("abs(t)").eval(-3.0) == doctest::Approx(3.0));
  CHECK(Expr::parse("pi").eval(0.0) == doctest::Approx(3.14159265358979));
  CHECK(Expr::parse("sqrt(t)").eval(9.0) == doctest::Approx(3.0));
}

TEST_CASE("precedence and associativity") {
  CHECK(Expr::parse("2+3*4").eval(0) == doctest::Approx(14.0));
  CHECK(Expr::parse("2*3^2").eval(0) == doctest::Approx(18.0));
  CHECK(Expr::parse("2^3^2").eval(0) == doctest::Approx(512.0));  // right-assoc
  CHECK(Expr::parse("-t^2").eval(3.0) == doctest::Approx(-9.0));
  CHECK(Expr::parse("2-3-4").eval(0) == doctest::Approx(-5.0));
  CHECK(Expr::parse("(2-3)-4").eval(0) == doctest::Approx(-5.0));
  CHECK(Expr::parse("12/4/3").eval(0) == doctest::Approx(1.0));
}

TEST_CASE("syntax errors carry byte offsets") {
  try {
    Expr::parse("t++");
    FAIL("expected SyntaxError");
  } catch (const SyntaxError& e) {
    CHECK(e.offset() == 2);
  }
  CHECK_THROWS_AS(Expr::parse(""), SyntaxError);
  CHECK_THROWS_AS(Expr::parse("(t+1"), SyntaxError);
  CHECK_THROWS_AS(Expr::parse("sin()"), SyntaxError);
  CHECK_THROWS_AS(Expr::parse("t 2"), SyntaxError);
  CHECK_THROWS_AS(Expr::parse("foo(t)"), UnknownIdentifier);
  CHECK_THROWS_AS(Expr::parse("x+1"), UnknownIdentifier);
}

TEST_CASE("non-finite evaluation is an error") {
  CHECK_THROWS_AS(Expr::parse("1/t").eval(0.0), NonFiniteResult);
  CHECK_THROWS_AS(Expr::parse("sqrt(t)").eval(-1.0), NonFiniteResult);
  CHECK_THROWS_AS(Expr::parse("exp(t)").eval(1e9), NonFiniteResult);
}

TEST_CASE("is_constant folds literals") {
  double v = 0.0;
  CHECK(Expr::parse("1").is_constant(&v));
  CHECK(v == 1.0);
  CHECK(Expr::parse("2*3-5").is_constant(&v));
  CHECK(v == doctest::Approx(1.0));
  CHECK_FALSE(Expr::parse("t").is_constant());
}

TEST_CASE("matches a reference evaluator on random ASTs") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> ts(-2.0, 2.0);
  int checked = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const auto ref = random_ast(rng, 4);
    const Expr e = Expr::parse(ref->text());
    const double t = ts(rng);
    const double want = ref->eval(t);
    if (!std::isfinite(want)) continue;
    const double got = e.eval(t);
    CHECK(got == doctest::Approx(want).epsilon(1e-12));
    ++checked;
  }
  CHECK(checked > 800);
}

TEST_CASE("parse of print round-trips") {
  std::mt19937_64 rng(123);
  std::uniform_real_distribution<double> ts(-2.0, 2.0);
  for (int trial = 0; trial < 300; ++trial) {
    const auto ref = random_ast(rng, 4);
    const Expr e = Expr::parse(ref->text());
    const Expr again = Expr::parse(e.print());
    CHECK(again.print() == e.print());
    const double t = ts(rng);
    double want;
    try {
      want = e.eval(t);
    } catch (const NonFiniteResult&) {
      continue;
    }
    CHECK(again.eval(t) == doctest::Approx(want).epsilon(1e-14));
  }
}
