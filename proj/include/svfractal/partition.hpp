#ifndef SVFRACTAL_PARTITION_HPP
#define SVFRACTAL_PARTITION_HPP

#include <cstdint>
#include <vector>

namespace svf {

enum class PartitionFamily { Dyadic, Geometric, ExplicitPrefix };

// Countable partition t_1 < t_2 < ... with accumulation point t_inf,
// together with the affine contractions zeta_n mapping [t_1, t_inf]
// onto [t_n, t_{n+1}].
//
// Dyadic on [0,1]:   t_n = 1 - 2^(1-n)
// Geometric(r):      t_n = t_inf - (t_inf - t_1) * r^(n-1)
//
// The truncation N is the number of maps retained for CIFS, measure and
// dimension computations.  All node/zeta formulas remain valid for
// indices beyond N (except for explicit prefixes).
class Partition {
public:
  static constexpr int kInfinity = -1;  // sentinel index for t_inf

  static Partition dyadic(double t1, double t_inf, int truncation = 24);
  static Partition geometric(double t1, double t_inf, double ratio,
                             int truncation = 24);
  static Partition explicit_prefix(std::vector<double> nodes, double t_inf,
                                   int truncation);

  double t1() const { return t1_; }
  double t_inf() const { return t_inf_; }
  double length() const { return t_inf_ - t1_; }
  int truncation() const { return truncation_; }
  PartitionFamily family() const { return family_; }
  double ratio() const { return ratio_; }

  // t_n; node(kInfinity) returns t_inf.  Indices start at 1.
  double node(int n) const;

  // Contraction ratio a_n = (t_{n+1} - t_n) / (t_inf - t_1).
  double contraction_ratio(int n) const;

  // Per-map orientation; defaults to increasing for every n.
  bool decreasing(int n) const;
  void set_decreasing(int n, bool flag);

  // zeta_n : [t1, t_inf] -> [t_n, t_{n+1}].
  double zeta(int n, double t) const;
  double zeta_inv(int n, double x) const;

  // Index n with t_n <= t <= t_{n+1}; boundary nodes go to the lower
  // interval (except t_1).  Throws DomainError at t = t_inf.
  int locate(double t) const;

  // All composite images zeta_{i1..ik}(t_j), depths <= depth, indices
  // <= index_cap, t_j over nodes up to index_cap and t_inf.  Sorted and
  // deduplicated.
  std::vector<double> dense_points(int depth, int index_cap) const;

private:
  Partition() = default;

  double t1_ = 0.0;
  double t_inf_ = 1.0;
  PartitionFamily family_ = PartitionFamily::Dyadic;
  double ratio_ = 0.5;
  int truncation_ = 24;
  std::vector<double> prefix_;       // ExplicitPrefix only
  std::vector<bool> decreasing_;     // sparse; indices < size are explicit
};

}  // namespace svf

#endif
