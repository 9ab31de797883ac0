#ifndef SVFRACTAL_APPROXIMATION_HPP
#define SVFRACTAL_APPROXIMATION_HPP

#include "svfractal/rb_fractal.hpp"

namespace svf {

struct ErrorReport {
  double measured = 0.0;   // sup distance between Phi^alpha and Phi
  double bound = 0.0;
  double alpha = 0.0;
  double phi_minus_b = 0.0;
  double phi_norm = 0.0;
  bool pass() const { return measured <= bound + 1e-9; }
};

// (|a|/(1-|a|)) * ||Phi - B|| + (2|a|/(1-|a|)) * ||Phi||.
double error_bound(const FractalSystem& sys);

// Computes Phi^alpha and both sides of the bound.
ErrorReport check_error(const FractalSystem& sys, double tol = 1e-10);

struct OrderCheckOptions {
  int depth = 3;
  int index_cap = 8;
  double slack = 1e-6;
  double tol = 1e-10;
};

// Order-preservation check: phi <= u with single-valued endpoint values
// and endpoint-matched bases implies phi^alpha <= u^alpha, verified on
// the dense orbit points.  Throws HypothesisViolated when the theorem's
// premises fail, returns the containment verdict otherwise.
bool check_order_preservation(const SetFunction& phi, const SetFunction& u,
                              double alpha, const Partition& p,
                              const OrderCheckOptions& opts = {});

}  // namespace svf

#endif
