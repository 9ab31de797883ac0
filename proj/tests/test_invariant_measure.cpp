#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "svfractal/assignment.hpp"
#include "svfractal/errors.hpp"
#include "svfractal/invariant_measure.hpp"

using namespace svf;

namespace {

FractalSystem gentle_system(double alpha, int grid = 1025) {
  const auto p = Partition::dyadic(0.0, 1.0, 24);
  auto phi = SetFunction::from_envelopes(Expr::parse("1-0.002*t*(1-t)"),
                                         Expr::parse("1+0.002*t*(1-t)"), grid,
                                         p);
  auto base = SetFunction::constant(CompactSet(1.0), phi.grid_ptr());
  return FractalSystem(std::move(phi), std::move(base), alpha, p);
}

double brute_force_assignment(const std::vector<double>& cost, std::size_t n) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  double best = std::numeric_limits<double>::infinity();
  do {
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) total += cost[i * n + perm[i]];
    best = std::min(best, total);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

TEST_CASE("assignment solver matches brute force on small instances") {
  std::mt19937_64 rng(101);
  std::uniform_real_distribution<double> cs(0.0, 10.0);
  for (std::size_t n = 2; n <= 7; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<double> cost(n * n);
      for (double& c : cost) c = cs(rng);
      const auto match = solve_assignment(cost, n);
      // match must be a permutation
      std::vector<bool> used(n, false);
      for (auto j : match) {
        CHECK(j < n);
        CHECK_FALSE(used[j]);
        used[j] = true;
      }
      CHECK(assignment_cost(cost, n, match) ==
            doctest::Approx(brute_force_assignment(cost, n)).epsilon(1e-12));
    }
  }
}

TEST_CASE("probability vectors renormalize with positive weights") {
  const auto p = Partition::dyadic(0.0, 1.0, 24);
  const auto pv = ProbabilityVector::proportional(p);
  CHECK(pv.size() == 24);
  double sum = 0.0;
  for (std::size_t i = 0; i < pv.size(); ++i) {
    CHECK(pv.weight(i) > 0.0);
    sum += pv.weight(i);
  }
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(pv.cumulative().back() == 1.0);
  // a_i = 2^-i renormalized by (1 - 2^-24)
  CHECK(pv.weight(0) == doctest::Approx(0.5 / (1.0 - std::pow(2.0, -24))));

  CHECK_THROWS_AS(ProbabilityVector::explicit_weights({0.5, 0.0, 0.5}),
                  DomainError);
  CHECK_THROWS_AS(ProbabilityVector::explicit_weights({0.5, -0.1}),
                  DomainError);
  CHECK_NOTHROW(ProbabilityVector::explicit_weights({1.0, 0.0}, true));
}

TEST_CASE("chaos game is deterministic per seed") {
  const auto sys = gentle_system(0.3);
  const auto ff = fixed_point(sys);
  const auto pv = ProbabilityVector::proportional(sys.partition());
  const auto a = chaos_game(sys, ff.result, pv, 500, 100, 42);
  const auto b = chaos_game(sys, ff.result, pv, 500, 100, 42);
  REQUIRE(a.atoms.size() == b.atoms.size());
  for (std::size_t i = 0; i < a.atoms.size(); ++i) {
    CHECK(a.atoms[i].t == b.atoms[i].t);
    CHECK(a.atoms[i].s.lo == b.atoms[i].s.lo);
    CHECK(a.atoms[i].s.hi == b.atoms[i].s.hi);
  }
  const auto c = chaos_game(sys, ff.result, pv, 500, 100, 43);
  bool all_equal = true;
  for (std::size_t i = 0; i < a.atoms.size(); ++i)
    all_equal = all_equal && a.atoms[i].t == c.atoms[i].t;
  CHECK_FALSE(all_equal);
}

TEST_CASE("alpha = 0 atoms lie on the graph of Phi") {
  const auto p = Partition::dyadic(0.0, 1.0, 24);
  auto phi = SetFunction::from_envelopes(Expr::parse("t^2+1"),
                                         Expr::parse("t^2+2"), 1025, p);
  auto base = SetFunction::from_envelopes(Expr::parse("1+t"),
                                          Expr::parse("2+t"), phi.grid_ptr());
  const FractalSystem sys(std::move(phi), std::move(base), 0.0, p);
  const auto ff = fixed_point(sys);
  const auto pv = ProbabilityVector::proportional(p);
  const auto m = chaos_game(sys, ff.result, pv, 2000, 100, 7);
  for (const auto& atom : m.atoms) {
    const auto v = ff.result.evaluate(atom.t);
    CHECK(std::fabs(atom.s.lo - v.lo()) < 1e-5);
    CHECK(std::fabs(atom.s.hi - v.hi()) < 1e-5);
  }
  CHECK(support_check(m, ff.result, 2.0 / 1024.0) == doctest::Approx(1.0));
}

TEST_CASE("support check passes the default run") {
  const auto sys = gentle_system(0.3, 4097);
  const auto ff = fixed_point(sys);
  const auto pv = ProbabilityVector::proportional(sys.partition());
  const auto m = chaos_game(sys, ff.result, pv, 20000, 100, 1);
  CHECK(support_check(m, ff.result, 1e-3) >= 0.999);
}

TEST_CASE("mk distance metric axioms and translation") {
  const auto sys = gentle_system(0.3);
  const auto ff = fixed_point(sys);
  const auto pv = ProbabilityVector::proportional(sys.partition());
  const auto a = chaos_game(sys, ff.result, pv, 128, 100, 11);
  const auto b = chaos_game(sys, ff.result, pv, 128, 100, 12);
  const auto c = chaos_game(sys, ff.result, pv, 128, 100, 13);
  CHECK(mk_distance(a, a) <= 1e-12);
  const double ab = mk_distance(a, b);
  CHECK(ab == doctest::Approx(mk_distance(b, a)).epsilon(1e-9));
  CHECK(ab <= mk_distance(a, c) + mk_distance(c, b) + 1e-9);
  CHECK(ab > 0.0);

  // Translating every atom's set by {+c} transports at cost exactly |c|.
  EmpiricalMeasure shifted = a;
  for (auto& atom : shifted.atoms) {
    atom.s.lo += 0.25;
    atom.s.hi += 0.25;
  }
  CHECK(mk_distance(a, shifted) == doctest::Approx(0.25).epsilon(1e-9));

  CHECK_THROWS_AS(mk_distance(a, chaos_game(sys, ff.result, pv, 64, 100, 1)),
                  DomainError);
}

TEST_CASE("two-seed distance scales like n^(-1/2)") {
  const auto sys = gentle_system(0.3);
  const auto ff = fixed_point(sys);
  const auto pv = ProbabilityVector::proportional(sys.partition());
  const auto a = chaos_game(sys, ff.result, pv, 512, 100, 21);
  const auto b = chaos_game(sys, ff.result, pv, 512, 100, 22);
  // Calibration constant recorded from the fixture run: C = 1.0.
  CHECK(mk_distance(a, b) <= 1.0 / std::sqrt(512.0));
}

TEST_CASE("self similarity defect is near the sampling baseline") {
  const auto sys = gentle_system(0.3, 4097);
  const auto ff = fixed_point(sys);
  const auto pv = ProbabilityVector::proportional(sys.partition());
  const double defect = self_similarity_defect(sys, ff.result, pv, 512, 5);
  const auto a = chaos_game(sys, ff.result, pv, 512, 100, 6);
  const auto b = chaos_game(sys, ff.result, pv, 512, 100, 7);
  const double baseline = mk_distance(a, b);
  CHECK(defect <= 2.0 * baseline);
}

TEST_CASE("degenerate p collapses to the Dirac measure at G_1's fixed point") {
  const auto sys = gentle_system(0.3);
  const auto ff = fixed_point(sys);
  const auto pv = ProbabilityVector::explicit_weights(
      {1.0, 0.0, 0.0, 0.0}, true);
  const auto m = chaos_game(sys, ff.result, pv, 200, 100, 3);
  // Phi(0) = B(0) = {1}: the fixed point of G_1 is (0, {1}).
  for (const auto& atom : m.atoms) {
    CHECK(atom.t <= 1e-15);
    CHECK(std::fabs(atom.s.lo - 1.0) < 1e-12);
    CHECK(std::fabs(atom.s.hi - 1.0) < 1e-12);
  }
  const double defect = self_similarity_defect(sys, ff.result, pv, 200, 3);
  CHECK(defect <= 1e-12);
}
