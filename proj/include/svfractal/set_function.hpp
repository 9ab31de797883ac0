#ifndef SVFRACTAL_SET_FUNCTION_HPP
#define SVFRACTAL_SET_FUNCTION_HPP

#include <functional>
#include <memory>
#include <vector>

#include "svfractal/expr.hpp"
#include "svfractal/interval_set.hpp"
#include "svfractal/partition.hpp"

namespace svf {

using Grid = std::vector<double>;
using GridPtr = std::shared_ptr<const Grid>;

// Sampling grid: partition nodes t_1..t_{N+1} and t_inf, merged with a
// uniform refinement to grid_size points.
GridPtr make_grid(const Partition& p, int grid_size);

// A continuous set-valued map I -> K(R), sampled on a shared grid with
// per-part linear interpolation of endpoints between grid points.
// Mismatched part counts between neighbors fall back to interpolating
// the convex hulls.
class SetFunction {
public:
  SetFunction(GridPtr grid, std::vector<CompactSet> values);

  // Convex-valued function [lower(t), upper(t)].  Throws EnvelopeCrossing
  // style DomainError when lower > upper somewhere on the grid.
  static SetFunction from_envelopes(const Expr& lower, const Expr& upper,
                                    int grid_size, const Partition& p);
  static SetFunction from_envelopes(const Expr& lower, const Expr& upper,
                                    GridPtr grid);

  static SetFunction constant(const CompactSet& value, GridPtr grid);

  const Grid& grid() const { return *grid_; }
  const GridPtr& grid_ptr() const { return grid_; }
  const std::vector<CompactSet>& values() const { return values_; }
  const CompactSet& value_at(std::size_t i) const { return values_[i]; }

  // Interpolated evaluation; exact at grid points.
  CompactSet evaluate(double t) const;

  // Largest Hausdorff step between adjacent grid values (continuity
  // surrogate) and the corresponding difference quotient.
  double continuity_modulus() const { return modulus_; }
  double lipschitz_estimate() const { return lipschitz_; }

  // Pointwise transform on the same grid.
  SetFunction map(const std::function<CompactSet(double, const CompactSet&)>&
                      fn) const;

private:
  GridPtr grid_;
  std::vector<CompactSet> values_;
  double modulus_ = 0.0;
  double lipschitz_ = 0.0;
};

// sup over the union of both grids of H_d(f(t), g(t)).
double sup_metric(const SetFunction& f, const SetFunction& g);

// Containment f(t) within g(t) at every supplied point.
bool leq(const SetFunction& f, const SetFunction& g,
         const std::vector<double>& points,
         double eps = CompactSet::kContainmentEps);

// sup over the grid of H_d(f(t), {0}).
double norm_inf(const SetFunction& f);

// B(t) = h(t)*Phi(t) + (t - t1)*(Phi(t_inf) - Phi(t1))
//      + (t_inf - t)*(Phi(t1) - Phi(t)),
// with the hypothesis h(t1) = h(t_inf) = 1.
SetFunction base_function(const SetFunction& phi, const Expr& h,
                          const Partition& p);

}  // namespace svf

#endif
