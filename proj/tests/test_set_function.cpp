#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "svfractal/errors.hpp"
#include "svfractal/set_function.hpp"

using namespace svf;

namespace {

Partition dyadic24() { return Partition::dyadic(0.0, 1.0, 24); }

SetFunction band(const Partition& p, int grid = 257) {
  return SetFunction::from_envelopes(Expr::parse("t^2+1"), Expr::parse("t^2+2"),
                                     grid, p);
}

}  // namespace

TEST_CASE("grid contains nodes, t_inf and the uniform refinement") {
  const auto p = dyadic24();
  const auto g = make_grid(p, 257);
  CHECK(g->front() == 0.0);
  CHECK(g->back() == 1.0);
  CHECK(g->size() >= 257);
  for (int n = 1; n <= 25; ++n) {
    const double t = p.node(n);
    CHECK(std::binary_search(g->begin(), g->end(), t));
  }
  for (std::size_t i = 1; i < g->size(); ++i) CHECK((*g)[i] > (*g)[i - 1]);
}

TEST_CASE("envelope sampling and evaluation") {
  const auto p = dyadic24();
  const auto f = band(p);
  CHECK(f.evaluate(0.0) == CompactSet(1.0, 2.0));
  CHECK(f.evaluate(1.0) == CompactSet(2.0, 3.0));
  const auto mid = f.evaluate(0.5);
  CHECK(mid.lo() == doctest::Approx(1.25).epsilon(1e-6));
  CHECK(mid.hi() == doctest::Approx(2.25).epsilon(1e-6));
  CHECK(norm_inf(f) == doctest::Approx(3.0));
  CHECK_THROWS_AS(f.evaluate(1.5), DomainError);
}

TEST_CASE("crossing envelopes are rejected") {
  const auto p = dyadic24();
  CHECK_THROWS_AS(SetFunction::from_envelopes(Expr::parse("t"),
                                              Expr::parse("1-t"), 257, p),
                  DomainError);
}

TEST_CASE("constant functions and map") {
  const auto p = dyadic24();
  const auto g = make_grid(p, 65);
  const auto c = SetFunction::constant(CompactSet(-1.0, 1.0), g);
  CHECK(c.evaluate(0.37) == CompactSet(-1.0, 1.0));
  CHECK(c.continuity_modulus() == 0.0);
  const auto shifted = c.map([](double t, const CompactSet& v) {
    return minkowski_sum(v, CompactSet(t));
  });
  CHECK(shifted.evaluate(0.0) == CompactSet(-1.0, 1.0));
  CHECK(shifted.evaluate(1.0) == CompactSet(0.0, 2.0));
}

TEST_CASE("sup metric properties") {
  const auto p = dyadic24();
  const auto f = band(p);
  const auto g = f.map([](double, const CompactSet& v) {
    return minkowski_sum(v, CompactSet(0.25));
  });
  CHECK(sup_metric(f, f) == 0.0);
  CHECK(sup_metric(f, g) == doctest::Approx(0.25));
  CHECK(sup_metric(g, f) == doctest::Approx(0.25));

  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> cs(-0.5, 0.5);
  for (int trial = 0; trial < 50; ++trial) {
    const double c1 = cs(rng), c2 = cs(rng);
    auto u = f.map([&](double t, const CompactSet& v) {
      return minkowski_sum(v, CompactSet(c1 * std::sin(3 * t)));
    });
    auto v = f.map([&](double t, const CompactSet& w) {
      return minkowski_sum(w, CompactSet(c2 * t));
    });
    const double duv = sup_metric(u, v);
    CHECK(duv <= sup_metric(u, f) + sup_metric(f, v) + 1e-12);
    CHECK(duv == doctest::Approx(sup_metric(v, u)).epsilon(1e-14));
  }
}

TEST_CASE("sup metric across different grids") {
  const auto p = dyadic24();
  const auto f = band(p, 257);
  const auto g = band(p, 1025);
  // Same underlying envelopes; only interpolation error remains.
  CHECK(sup_metric(f, g) < 1e-4);
}

TEST_CASE("pointwise order check") {
  const auto p = dyadic24();
  const auto f = band(p);
  const auto wide = f.map([](double, const CompactSet& v) {
    return CompactSet(v.lo() - 0.1, v.hi() + 0.1);
  });
  const auto pts = p.dense_points(2, 6);
  CHECK(leq(f, wide, pts));
  CHECK_FALSE(leq(wide, f, pts));
}

TEST_CASE("base function satisfies its endpoint hypothesis gate") {
  const auto p = dyadic24();
  const auto f = band(p);
  const auto b = base_function(f, Expr::parse("1"), p);
  // h = 1: B(t) = Phi(t) + (t-t1)(Phi(t_inf)-Phi(t1)) + (t_inf-t)(Phi(t1)-Phi(t))
  const auto b0 = b.evaluate(0.0);
  // At t1: B = Phi(t1) + (t_inf-t1)(Phi(t1)-Phi(t1)) = Phi(t1) + [-1,1]
  CHECK(b0.lo() == doctest::Approx(0.0));
  CHECK(b0.hi() == doctest::Approx(3.0));
  // h(t1) != 1 violates the hypothesis.
  CHECK_THROWS_AS(base_function(f, Expr::parse("t+2"), p), HypothesisViolated);
}
