#ifndef SVFRACTAL_DIMENSION_HPP
#define SVFRACTAL_DIMENSION_HPP

#include <vector>

#include "svfractal/cifs_graph.hpp"

namespace svf {

// Lower (b_i = min{|alpha|, a_i}) or upper (c_i = max{|alpha|, a_i})
// bi-Lipschitz ratio sequence of a system, or explicit values in (0,1).
class RatioSequence {
public:
  enum class Kind { Lower, Upper };

  static RatioSequence from_system(const FractalSystem& sys, Kind kind,
                                   int count);
  static RatioSequence explicit_values(std::vector<double> values);

  double value(int i) const;  // 1-based
  std::vector<double> prefix(int k) const;
  int size() const { return static_cast<int>(values_.size()); }

private:
  explicit RatioSequence(std::vector<double> v) : values_(std::move(v)) {}
  std::vector<double> values_;
};

struct SStarResult {
  double s_star = 0.0;
  std::vector<double> s_k;  // s_2, s_3, ...
  bool stalled = false;     // increments fell below stall_tol
};

struct DimensionReport {
  SStarResult lower;
  double s_upper = 0.0;          // +infinity when the series never converges
  bool s_upper_finite = true;
  double box_estimate = 0.0;
  bool has_box_estimate = false;
};

// Unique root of sum_{i<=k} b_i^s = 1 (k >= 2), by bisection.
double moran_solve_finite(const std::vector<double>& b, double tol = 1e-12);

// Monotone sequence s_k for k = 2..k_max and its limit.
SStarResult s_star(const RatioSequence& b, int k_max = 64,
                   double stall_tol = 1e-9);

// max{ inf{s : sum_i c_i^s <= 1}, 1 }; infinite (s_upper_finite = false
// in the report, +inf here) when the c_i are bounded away from zero.
double s_upper(const RatioSequence& c, int k_max = 64, double tol = 1e-12);

// Least-squares slope of log N(delta) against log(1/delta), counting
// occupied cells after embedding each atom as the segment {t} x [lo,hi].
double box_count_estimate(const GraphCloud& cloud,
                          const std::vector<double>& scales);

}  // namespace svf

#endif
