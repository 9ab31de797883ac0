#include "svfractal/rb_fractal.hpp"

#include <cmath>

#include "svfractal/errors.hpp"

namespace svf {

FractalSystem::FractalSystem(SetFunction phi, SetFunction base, double alpha,
                             Partition p, bool interpolating)
    : phi_(std::move(phi)),
      base_(std::move(base)),
      alpha_(alpha),
      partition_(std::move(p)),
      interpolating_(interpolating) {
  if (!(std::fabs(alpha_) < 1.0))
    throw DomainError("scaling factor must satisfy |alpha| < 1");
  if (phi_.grid_ptr() != base_.grid_ptr())
    throw DomainError("phi and base must share one grid");
  const double t1 = partition_.t1(), tinf = partition_.t_inf();
  const CompactSet d1 = set_difference(base_.evaluate(t1), phi_.evaluate(t1));
  const CompactSet d2 =
      set_difference(base_.evaluate(tinf), phi_.evaluate(tinf));
  endpoint_defect_ = hausdorff_distance(d1, d2);
  if (interpolating_) {
    const CompactSet zero(0.0);
    auto single_and_matching = [&](double t) {
      const CompactSet pv = phi_.evaluate(t);
      const CompactSet bv = base_.evaluate(t);
      return hausdorff_distance(set_difference(pv, bv), zero) <= 1e-9;
    };
    if (!single_and_matching(t1) || !single_and_matching(tinf))
      throw HypothesisViolated(
          "interpolating mode needs Phi and B single valued and equal at "
          "t_1 and t_inf");
  }
}

SetFunction apply_rb(const FractalSystem& sys, const SetFunction& u) {
  if (u.grid_ptr() != sys.phi().grid_ptr())
    throw DomainError("RB operand is not aligned with the system grid");
  const Partition& p = sys.partition();
  const double alpha = sys.alpha();
  const double tinf = p.t_inf();
  const SetFunction& base = sys.base();
  return sys.phi().map([&](double t, const CompactSet& phi_t) {
    double s;
    if (t == tinf) {
      // Limit equation; with increasing tail orientation
      // zeta_n^{-1}(t_n) = t_1, so the bracket stabilizes at t_1.
      s = p.t1();
    } else {
      const int n = p.locate(t);
      s = p.zeta_inv(n, t);
    }
    const CompactSet bracket = set_difference(u.evaluate(s), base.evaluate(s));
    return minkowski_sum(phi_t, scale(alpha, bracket));
  });
}

FractalFunction fixed_point(const FractalSystem& sys, double tol) {
  if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
  const double alpha_abs = std::fabs(sys.alpha());
  SetFunction u = sys.phi();
  SetFunction next = apply_rb(sys, u);
  double step = sup_metric(next, u);
  const double target = tol * (1.0 - alpha_abs);
  int iterations = 1;
  int k_max = 1;
  if (step > target && alpha_abs > 0.0) {
    k_max = 2 + static_cast<int>(std::ceil(std::log(target / step) /
                                           std::log(alpha_abs)));
  }
  while (step > target) {
    if (iterations >= k_max)
      throw NoConvergence(
          "fixed-point iteration exceeded its a-priori cap; check grid "
          "alignment and the endpoint condition");
    u = std::move(next);
    next = apply_rb(sys, u);
    step = sup_metric(next, u);
    ++iterations;
  }
  FractalFunction ff{std::move(next), 0.0, iterations};
  ff.residual = self_residual(sys, ff.result);
  return ff;
}

double self_residual(const FractalSystem& sys, const SetFunction& u) {
  const SetFunction image = apply_rb(sys, u);
  const Grid& g = u.grid();
  double sup = 0.0;
  for (std::size_t i = 0; i + 1 < g.size(); ++i)
    sup = std::max(sup, hausdorff_distance(u.value_at(i), image.value_at(i)));
  return sup;
}

FractalFunction fractal_operator(const FractalSystem& sys_template,
                                 const SetFunction& phi,
                                 const std::optional<Expr>& h, double tol) {
  SetFunction base = h ? base_function(phi, *h, sys_template.partition())
                       : sys_template.base();
  FractalSystem sys(phi, std::move(base), sys_template.alpha(),
                    sys_template.partition(), false);
  return fixed_point(sys, tol);
}

}  // namespace svf
