#ifndef SVFRACTAL_CIFS_GRAPH_HPP
#define SVFRACTAL_CIFS_GRAPH_HPP

#include "svfractal/rb_fractal.hpp"

namespace svf {

// A point (t, S) of I x K_c(R); S stored as its hull interval.
struct GraphPoint {
  double t = 0.0;
  Interval s;
};

using GraphCloud = std::vector<GraphPoint>;

// d_G((t,S1),(w,S2)) = |t - w| + H_d(S1, S2).
double graph_metric(const GraphPoint& x, const GraphPoint& y);

// D((t,S1),(w,S2)) = |t - w| + H_d(S1 + Phi^a(w), S2 + Phi^a(t)).
double d_metric(const GraphPoint& x, const GraphPoint& y,
                const SetFunction& fractal);

// G_j(t,S) = (zeta_j(t), alpha*S + Phi(zeta_j(t)) - alpha*B(t)).
GraphPoint apply_G(const FractalSystem& sys, int j, const GraphPoint& x);

// Sample the graph of f as a cloud of `size` points with uniform t over
// [t_lo, t_hi].
GraphCloud sample_graph(const SetFunction& f, int size, double t_lo,
                        double t_hi);

// Max observed D-metric ratio of G_j over random pairs; the bound is
// max{|alpha|, a_j} per map.
struct ContractionReport {
  double max_ratio = 0.0;   // ratio of the worst pair (largest ratio - bound)
  double bound = 0.0;       // bound applying to that pair's map
  double max_excess = -1.0; // max over pairs and maps of ratio - bound
  bool pass(double slack = 1e-9) const { return max_excess <= slack; }
};
ContractionReport verify_contraction(const FractalSystem& sys,
                                     const SetFunction& fractal, int samples,
                                     unsigned long long seed = 7);

// Hausdorff distance (graph metric) between the sampled graph restricted
// to [t_1, t_{N+1}] and the union of the G_j images of the cloud.
double attractor_defect(const FractalSystem& sys, const SetFunction& fractal,
                        int cloud_size);

// Point-set Hausdorff distance under the graph metric.
double cloud_hausdorff(const GraphCloud& a, const GraphCloud& b);

}  // namespace svf

#endif
