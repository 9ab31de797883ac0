#ifndef SVFRACTAL_INVARIANT_MEASURE_HPP
#define SVFRACTAL_INVARIANT_MEASURE_HPP

#include <cstdint>

#include "svfractal/cifs_graph.hpp"

namespace svf {

// Weights over the first N CIFS maps.  Strictly positive entries summing
// to one after truncation-renormalization; degenerate vectors (a single
// unit weight) are allowed only when explicitly requested for the Dirac
// test cases.
class ProbabilityVector {
public:
  static ProbabilityVector proportional(const Partition& p);
  static ProbabilityVector explicit_weights(std::vector<double> weights,
                                            bool allow_degenerate = false);

  std::size_t size() const { return weights_.size(); }
  double weight(std::size_t i) const { return weights_[i]; }
  const std::vector<double>& weights() const { return weights_; }
  // cumulative[i] = sum of weights up to and including i; back() == 1.
  const std::vector<double>& cumulative() const { return cumulative_; }

private:
  explicit ProbabilityVector(std::vector<double> w, bool allow_degenerate);
  std::vector<double> weights_;
  std::vector<double> cumulative_;
};

enum class MeasureMetric { Graph, D };

struct EmpiricalMeasure {
  GraphCloud atoms;            // uniform weights 1/n
  std::uint64_t seed = 0;
  int burn_in = 0;
};

// Chaos-game orbit x_{k+1} = G_{i_k}(x_k), i_k ~ p via inverse CDF over
// a seeded mt19937_64; starts at (t_1, Phi^alpha(t_1)), discards the
// first burn_in steps and keeps n atoms.
EmpiricalMeasure chaos_game(const FractalSystem& sys,
                            const SetFunction& fractal,
                            const ProbabilityVector& p, int n, int burn_in,
                            std::uint64_t seed);

// Fraction of atoms within graph-metric distance eps of the sampled
// graph cloud of the fractal function.
double support_check(const EmpiricalMeasure& m, const SetFunction& fractal,
                     double eps);

// Exact Wasserstein-1 distance between equal-size uniform empirical
// measures under the chosen ground metric (assignment solve; n <= 1024).
double mk_distance(const EmpiricalMeasure& a, const EmpiricalMeasure& b,
                   MeasureMetric metric = MeasureMetric::Graph,
                   const SetFunction* fractal = nullptr);

// mk distance between a chaos-game sample and its one-step pushforward
// (resample atoms, push each through G_i with i ~ p).
double self_similarity_defect(const FractalSystem& sys,
                              const SetFunction& fractal,
                              const ProbabilityVector& p, int n,
                              std::uint64_t seed);

}  // namespace svf

#endif
