#include "svfractal/set_function.hpp"

#include <algorithm>
#include <cmath>

#include "svfractal/errors.hpp"

namespace svf {

GridPtr make_grid(const Partition& p, int grid_size) {
  if (grid_size < 2) throw DomainError("grid_size must be at least 2");
  Grid g;
  g.reserve(static_cast<std::size_t>(grid_size) + p.truncation() + 2);
  for (int n = 1; n <= p.truncation() + 1; ++n) g.push_back(p.node(n));
  g.push_back(p.t_inf());
  const double t1 = p.t1(), L = p.length();
  for (int i = 0; i < grid_size; ++i)
    g.push_back(t1 + L * static_cast<double>(i) / (grid_size - 1));
  std::sort(g.begin(), g.end());
  const double eps = 1e-15 * std::max(1.0, std::fabs(p.t_inf()));
  g.erase(std::unique(g.begin(), g.end(),
                      [eps](double a, double b) { return b - a < eps; }),
          g.end());
  // Keep the exact endpoints.
  g.front() = t1;
  g.back() = p.t_inf();
  return std::make_shared<const Grid>(std::move(g));
}

SetFunction::SetFunction(GridPtr grid, std::vector<CompactSet> values)
    : grid_(std::move(grid)), values_(std::move(values)) {
  if (!grid_ || grid_->size() < 2)
    throw DomainError("SetFunction needs a grid with at least two points");
  if (grid_->size() != values_.size())
    throw DomainError("grid/value size mismatch");
  for (std::size_t i = 0; i + 1 < values_.size(); ++i) {
    const double step = hausdorff_distance(values_[i], values_[i + 1]);
    const double gap = (*grid_)[i + 1] - (*grid_)[i];
    modulus_ = std::max(modulus_, step);
    if (gap > 0) lipschitz_ = std::max(lipschitz_, step / gap);
  }
}

SetFunction SetFunction::from_envelopes(const Expr& lower, const Expr& upper,
                                        int grid_size, const Partition& p) {
  return from_envelopes(lower, upper, make_grid(p, grid_size));
}

SetFunction SetFunction::from_envelopes(const Expr& lower, const Expr& upper,
                                        GridPtr grid) {
  std::vector<CompactSet> values;
  values.reserve(grid->size());
  for (double t : *grid) {
    const double lo = lower.eval(t);
    const double hi = upper.eval(t);
    if (lo > hi)
      throw DomainError("envelopes cross at t=" + std::to_string(t));
    values.emplace_back(lo, hi);
  }
  return SetFunction(std::move(grid), std::move(values));
}

SetFunction SetFunction::constant(const CompactSet& value, GridPtr grid) {
  std::vector<CompactSet> values(grid->size(), value);
  return SetFunction(std::move(grid), std::move(values));
}

namespace {

CompactSet lerp_sets(const CompactSet& a, const CompactSet& b, double lam) {
  if (a.part_count() == b.part_count()) {
    std::vector<Interval> parts;
    parts.reserve(a.part_count());
    for (std::size_t i = 0; i < a.part_count(); ++i) {
      parts.push_back({(1 - lam) * a.parts()[i].lo + lam * b.parts()[i].lo,
                       (1 - lam) * a.parts()[i].hi + lam * b.parts()[i].hi});
    }
    return CompactSet::from_parts(std::move(parts));
  }
  // Part-count mismatch: interpolate the hulls.
  return CompactSet((1 - lam) * a.lo() + lam * b.lo(),
                    (1 - lam) * a.hi() + lam * b.hi());
}

}  // namespace

CompactSet SetFunction::evaluate(double t) const {
  const Grid& g = *grid_;
  const double slack = 1e-12 * std::max(1.0, std::fabs(g.back()));
  if (t < g.front() - slack || t > g.back() + slack)
    throw DomainError("evaluate argument outside the domain");
  t = std::clamp(t, g.front(), g.back());
  auto it = std::lower_bound(g.begin(), g.end(), t);
  if (it != g.end() && *it == t)
    return values_[static_cast<std::size_t>(it - g.begin())];
  const std::size_t hi = static_cast<std::size_t>(it - g.begin());
  const std::size_t lo = hi - 1;
  const double lam = (t - g[lo]) / (g[hi] - g[lo]);
  return lerp_sets(values_[lo], values_[hi], lam);
}

SetFunction SetFunction::map(
    const std::function<CompactSet(double, const CompactSet&)>& fn) const {
  std::vector<CompactSet> out;
  out.reserve(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i)
    out.push_back(fn((*grid_)[i], values_[i]));
  return SetFunction(grid_, std::move(out));
}

double sup_metric(const SetFunction& f, const SetFunction& g) {
  const Grid& gf = f.grid();
  const Grid& gg = g.grid();
  if (gf.front() != gg.front() || gf.back() != gg.back())
    throw DomainError("sup_metric requires matching domains");
  double sup = 0.0;
  if (f.grid_ptr() == g.grid_ptr()) {
    for (std::size_t i = 0; i < gf.size(); ++i)
      sup = std::max(sup, hausdorff_distance(f.value_at(i), g.value_at(i)));
    return sup;
  }
  Grid merged;
  merged.reserve(gf.size() + gg.size());
  std::merge(gf.begin(), gf.end(), gg.begin(), gg.end(),
             std::back_inserter(merged));
  merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
  for (double t : merged)
    sup = std::max(sup, hausdorff_distance(f.evaluate(t), g.evaluate(t)));
  return sup;
}

bool leq(const SetFunction& f, const SetFunction& g,
         const std::vector<double>& points, double eps) {
  for (double t : points)
    if (!subset_leq(f.evaluate(t), g.evaluate(t), eps)) return false;
  return true;
}

double norm_inf(const SetFunction& f) {
  double sup = 0.0;
  for (const auto& v : f.values()) sup = std::max(sup, norm_to_zero(v));
  return sup;
}

SetFunction base_function(const SetFunction& phi, const Expr& h,
                          const Partition& p) {
  const double t1 = p.t1(), tinf = p.t_inf();
  if (std::fabs(h.eval(t1) - 1.0) > 1e-12 ||
      std::fabs(h.eval(tinf) - 1.0) > 1e-12)
    throw HypothesisViolated("base function requires h(t1) = h(t_inf) = 1");
  const CompactSet phi1 = phi.evaluate(t1);
  const CompactSet phi_inf = phi.evaluate(tinf);
  const CompactSet span = set_difference(phi_inf, phi1);
  return phi.map([&](double t, const CompactSet& v) {
    CompactSet b = scale(h.eval(t), v);
    b = minkowski_sum(b, scale(t - t1, span));
    b = minkowski_sum(b, scale(tinf - t, set_difference(phi1, v)));
    return b;
  });
}

}  // namespace svf
