#include "svfractal/approximation.hpp"

#include <cmath>

#include "svfractal/errors.hpp"

namespace svf {

double error_bound(const FractalSystem& sys) {
  const double a = std::fabs(sys.alpha());
  const double factor = a / (1.0 - a);
  return factor * sup_metric(sys.phi(), sys.base()) +
         2.0 * factor * norm_inf(sys.phi());
}

ErrorReport check_error(const FractalSystem& sys, double tol) {
  ErrorReport r;
  r.alpha = sys.alpha();
  r.phi_minus_b = sup_metric(sys.phi(), sys.base());
  r.phi_norm = norm_inf(sys.phi());
  r.bound = error_bound(sys);
  const FractalFunction ff = fixed_point(sys, tol);
  r.measured = sup_metric(ff.result, sys.phi());
  return r;
}

namespace {

bool single_valued(const CompactSet& s, double eps = 1e-9) {
  return s.is_interval() && diameter(s) <= eps;
}

// Chord between the endpoint values; single-valued everywhere, so it
// matches both functions' endpoint data whenever those coincide.
SetFunction chord_base(const SetFunction& f, const Partition& p) {
  const double t1 = p.t1(), L = p.length();
  const double y1 = f.evaluate(t1).lo();
  const double y2 = f.evaluate(p.t_inf()).lo();
  return f.map([&](double t, const CompactSet&) {
    const double lam = (t - t1) / L;
    return CompactSet((1 - lam) * y1 + lam * y2);
  });
}

}  // namespace

bool check_order_preservation(const SetFunction& phi, const SetFunction& u,
                              double alpha, const Partition& p,
                              const OrderCheckOptions& opts) {
  const double t1 = p.t1(), tinf = p.t_inf();
  for (double t : {t1, tinf}) {
    if (!single_valued(phi.evaluate(t)) || !single_valued(u.evaluate(t)))
      throw HypothesisViolated(
          "order preservation needs single-valued endpoint values");
  }
  const std::vector<double> points = p.dense_points(opts.depth, opts.index_cap);
  if (!leq(phi, u, points, opts.slack))
    throw HypothesisViolated("phi <= u fails on the dense point set");

  const SetFunction base_phi = chord_base(phi, p);
  const SetFunction base_u = chord_base(u, p);
  for (double t : {t1, tinf}) {
    if (hausdorff_distance(base_phi.evaluate(t), phi.evaluate(t)) > 1e-9 ||
        hausdorff_distance(base_u.evaluate(t), u.evaluate(t)) > 1e-9)
      throw HypothesisViolated("base endpoint matching fails");
  }
  if (!leq(base_phi, base_u, points, opts.slack))
    throw HypothesisViolated("base_phi <= base_u fails");

  FractalSystem sys_phi(phi, base_phi, alpha, p, false);
  FractalSystem sys_u(u, base_u, alpha, p, false);
  const FractalFunction f_phi = fixed_point(sys_phi, opts.tol);
  const FractalFunction f_u = fixed_point(sys_u, opts.tol);
  return leq(f_phi.result, f_u.result, points, opts.slack);
}

}  // namespace svf
