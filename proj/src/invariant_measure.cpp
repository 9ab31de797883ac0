#include "svfractal/invariant_measure.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "svfractal/assignment.hpp"
#include "svfractal/errors.hpp"

namespace svf {

namespace {

// Compensated summation keeps the renormalized weights summing to one
// up to a single rounding.
double kahan_sum(const std::vector<double>& xs) {
  double sum = 0.0, c = 0.0;
  for (double x : xs) {
    const double y = x - c;
    const double t = sum + y;
    c = (t - sum) - y;
    sum = t;
  }
  return sum;
}

}  // namespace

ProbabilityVector::ProbabilityVector(std::vector<double> w,
                                     bool allow_degenerate) {
  if (w.empty()) throw DomainError("probability vector must be non-empty");
  for (double x : w) {
    if (x < 0.0) throw DomainError("negative probability weight");
    if (x == 0.0 && !allow_degenerate)
      throw DomainError("probability weights must be strictly positive");
  }
  const double total = kahan_sum(w);
  if (!(total > 0.0)) throw DomainError("probability weights sum to zero");
  for (double& x : w) x /= total;
  weights_ = std::move(w);
  cumulative_.resize(weights_.size());
  double acc = 0.0, c = 0.0;
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    const double y = weights_[i] - c;
    const double t = acc + y;
    c = (t - acc) - y;
    acc = t;
    cumulative_[i] = acc;
  }
  cumulative_.back() = 1.0;
}

ProbabilityVector ProbabilityVector::proportional(const Partition& p) {
  std::vector<double> w;
  w.reserve(static_cast<std::size_t>(p.truncation()));
  for (int i = 1; i <= p.truncation(); ++i)
    w.push_back(p.contraction_ratio(i));
  return ProbabilityVector(std::move(w), false);
}

ProbabilityVector ProbabilityVector::explicit_weights(
    std::vector<double> weights, bool allow_degenerate) {
  return ProbabilityVector(std::move(weights), allow_degenerate);
}

namespace {

std::size_t draw_index(const std::vector<double>& cdf, double u) {
  auto it = std::lower_bound(cdf.begin(), cdf.end(), u);
  if (it == cdf.end()) --it;
  return static_cast<std::size_t>(it - cdf.begin());
}

}  // namespace

EmpiricalMeasure chaos_game(const FractalSystem& sys,
                            const SetFunction& fractal,
                            const ProbabilityVector& p, int n, int burn_in,
                            std::uint64_t seed) {
  if (n <= 0 || burn_in < 0)
    throw DomainError("chaos game needs n > 0 and burn_in >= 0");
  if (p.size() > static_cast<std::size_t>(sys.partition().truncation()))
    throw DomainError("probability vector longer than the truncation");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  const double t1 = sys.partition().t1();
  const CompactSet start = fractal.evaluate(t1);
  GraphPoint x{t1, {start.lo(), start.hi()}};
  EmpiricalMeasure m;
  m.seed = seed;
  m.burn_in = burn_in;
  m.atoms.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < burn_in + n; ++k) {
    const std::size_t i = draw_index(p.cumulative(), uniform(rng));
    x = apply_G(sys, static_cast<int>(i) + 1, x);
    if (k >= burn_in) m.atoms.push_back(x);
  }
  return m;
}

double support_check(const EmpiricalMeasure& m, const SetFunction& fractal,
                     double eps) {
  GraphCloud reference;
  reference.reserve(fractal.grid().size());
  for (std::size_t i = 0; i < fractal.grid().size(); ++i) {
    const CompactSet& v = fractal.value_at(i);
    reference.push_back({fractal.grid()[i], {v.lo(), v.hi()}});
  }
  std::size_t inside = 0;
  for (const auto& atom : m.atoms) {
    // Only reference points with |t - atom.t| <= eps can be within eps.
    auto lo = std::lower_bound(
        reference.begin(), reference.end(), atom.t - eps,
        [](const GraphPoint& g, double t) { return g.t < t; });
    bool hit = false;
    for (auto it = lo; it != reference.end() && it->t <= atom.t + eps; ++it) {
      if (graph_metric(atom, *it) <= eps) {
        hit = true;
        break;
      }
    }
    if (hit) ++inside;
  }
  return static_cast<double>(inside) / static_cast<double>(m.atoms.size());
}

double mk_distance(const EmpiricalMeasure& a, const EmpiricalMeasure& b,
                   MeasureMetric metric, const SetFunction* fractal) {
  const std::size_t n = a.atoms.size();
  if (n != b.atoms.size())
    throw DomainError("mk_distance needs equal atom counts");
  if (n > 1024)
    throw DomainError("mk_distance limited to 1024 atoms (exact solve)");
  if (metric == MeasureMetric::D && !fractal)
    throw DomainError("D ground metric needs the fractal function");
  std::vector<double> cost(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      cost[i * n + j] = metric == MeasureMetric::Graph
                            ? graph_metric(a.atoms[i], b.atoms[j])
                            : d_metric(a.atoms[i], b.atoms[j], *fractal);
    }
  }
  const auto match = solve_assignment(cost, n);
  return assignment_cost(cost, n, match) / static_cast<double>(n);
}

double self_similarity_defect(const FractalSystem& sys,
                              const SetFunction& fractal,
                              const ProbabilityVector& p, int n,
                              std::uint64_t seed) {
  const EmpiricalMeasure m = chaos_game(sys, fractal, p, n, 100, seed);
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  std::uniform_int_distribution<std::size_t> pick(0, m.atoms.size() - 1);
  EmpiricalMeasure pushed;
  pushed.seed = seed;
  pushed.atoms.reserve(m.atoms.size());
  for (std::size_t k = 0; k < m.atoms.size(); ++k) {
    const GraphPoint& x = m.atoms[pick(rng)];
    const std::size_t i = draw_index(p.cumulative(), uniform(rng));
    pushed.atoms.push_back(apply_G(sys, static_cast<int>(i) + 1, x));
  }
  return mk_distance(m, pushed, MeasureMetric::Graph);
}

}  // namespace svf
