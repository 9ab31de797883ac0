#ifndef SVFRACTAL_RB_FRACTAL_HPP
#define SVFRACTAL_RB_FRACTAL_HPP

#include <optional>

#include "svfractal/set_function.hpp"

namespace svf {

// Bundle (Phi, B, alpha, partition) defining the RB operator and the
// associated CIFS maps.
class FractalSystem {
public:
  // interpolating = true additionally requires Phi and B single valued
  // and equal at t_1 and t_inf, which forces the fixed point to pass
  // through Phi at every node.
  FractalSystem(SetFunction phi, SetFunction base, double alpha, Partition p,
                bool interpolating = false);

  const SetFunction& phi() const { return phi_; }
  const SetFunction& base() const { return base_; }
  double alpha() const { return alpha_; }
  const Partition& partition() const { return partition_; }
  bool interpolating() const { return interpolating_; }

  // H_d(B(t1) - Phi(t1), B(t_inf) - Phi(t_inf)).
  double endpoint_defect() const { return endpoint_defect_; }

private:
  SetFunction phi_;
  SetFunction base_;
  double alpha_;
  Partition partition_;
  bool interpolating_;
  double endpoint_defect_;
};

struct FractalFunction {
  SetFunction result;
  double residual = 0.0;
  int iterations = 0;
};

// One application of the Read-Bajraktarevic operator:
//   (phi U)(t) = Phi(t) + alpha * [U(zeta_n^{-1}(t)) - B(zeta_n^{-1}(t))]
// for t in I_n, and at t_inf the reduction of the limit equation
// (increasing tail orientation makes zeta_n^{-1}(t_n) = t_1 identically).
SetFunction apply_rb(const FractalSystem& sys, const SetFunction& u);

// Banach iteration from U_0 = Phi; stops when successive iterates are
// within tol * (1 - |alpha|) in the sup metric.
FractalFunction fixed_point(const FractalSystem& sys, double tol = 1e-10);

// sup over grid points t < t_inf of the self-referential defect of u.
double self_residual(const FractalSystem& sys, const SetFunction& u);

// The alpha-countable fractal operator: Phi -> Phi^alpha, keeping the
// template's base and partition.  When h is given the base is rebuilt
// from phi via the base-function formula.
FractalFunction fractal_operator(const FractalSystem& sys_template,
                                 const SetFunction& phi,
                                 const std::optional<Expr>& h = std::nullopt,
                                 double tol = 1e-10);

}  // namespace svf

#endif
