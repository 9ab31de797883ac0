#include "svfractal/partition.hpp"

#include <algorithm>
#include <cmath>

#include "svfractal/errors.hpp"

namespace svf {

Partition Partition::dyadic(double t1, double t_inf, int truncation) {
  return geometric(t1, t_inf, 0.5, truncation);
}

Partition Partition::geometric(double t1, double t_inf, double ratio,
                               int truncation) {
  if (!(t1 < t_inf)) throw DomainError("partition requires t1 < t_inf");
  if (!(ratio > 0.0 && ratio < 1.0))
    throw DomainError("geometric ratio must lie in (0,1)");
  if (truncation < 1) throw DomainError("truncation must be positive");
  Partition p;
  p.t1_ = t1;
  p.t_inf_ = t_inf;
  p.family_ = ratio == 0.5 ? PartitionFamily::Dyadic : PartitionFamily::Geometric;
  p.ratio_ = ratio;
  p.truncation_ = truncation;
  return p;
}

Partition Partition::explicit_prefix(std::vector<double> nodes, double t_inf,
                                     int truncation) {
  if (nodes.size() < static_cast<std::size_t>(truncation) + 1)
    throw DomainError("explicit prefix must cover truncation + 1 nodes");
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i)
    if (!(nodes[i] < nodes[i + 1]))
      throw DomainError("explicit nodes must be strictly increasing");
  if (!(nodes.back() < t_inf))
    throw DomainError("explicit nodes must stay below t_inf");
  Partition p;
  p.t1_ = nodes.front();
  p.t_inf_ = t_inf;
  p.family_ = PartitionFamily::ExplicitPrefix;
  p.truncation_ = truncation;
  p.prefix_ = std::move(nodes);
  return p;
}

double Partition::node(int n) const {
  if (n == kInfinity) return t_inf_;
  if (n < 1) throw DomainError("node index starts at 1");
  if (family_ == PartitionFamily::ExplicitPrefix) {
    if (static_cast<std::size_t>(n) > prefix_.size())
      throw DomainError("node index beyond explicit prefix");
    return prefix_[static_cast<std::size_t>(n) - 1];
  }
  // t_n = t_inf - L * r^(n-1); exact at n = 1.
  return t_inf_ - length() * std::pow(ratio_, n - 1);
}

double Partition::contraction_ratio(int n) const {
  return (node(n + 1) - node(n)) / length();
}

bool Partition::decreasing(int n) const {
  const auto i = static_cast<std::size_t>(n - 1);
  return i < decreasing_.size() && decreasing_[i];
}

void Partition::set_decreasing(int n, bool flag) {
  const auto i = static_cast<std::size_t>(n - 1);
  if (i >= decreasing_.size()) decreasing_.resize(i + 1, false);
  decreasing_[i] = flag;
}

double Partition::zeta(int n, double t) const {
  if (t < t1_ - 1e-12 || t > t_inf_ + 1e-12)
    throw DomainError("zeta argument outside [t1, t_inf]");
  const double a = contraction_ratio(n);
  if (decreasing(n)) return node(n + 1) - a * (t - t1_);
  return node(n) + a * (t - t1_);
}

double Partition::zeta_inv(int n, double x) const {
  const double lo = node(n), hi = node(n + 1);
  const double slack = 1e-12 * std::max(1.0, std::fabs(t_inf_));
  if (x < lo - slack || x > hi + slack)
    throw DomainError("zeta_inv argument outside I_n");
  const double a = contraction_ratio(n);
  const double t = decreasing(n) ? t1_ + (hi - x) / a : t1_ + (x - lo) / a;
  return std::clamp(t, t1_, t_inf_);
}

int Partition::locate(double t) const {
  if (t == t_inf_)
    throw DomainError("t = t_inf must be handled via the limit equation");
  if (t < t1_ || t > t_inf_)
    throw DomainError("locate argument outside [t1, t_inf)");
  int n = 1;
  if (family_ == PartitionFamily::ExplicitPrefix) {
    auto it = std::upper_bound(prefix_.begin(), prefix_.end(), t);
    n = static_cast<int>(it - prefix_.begin());
    n = std::max(1, n);
    if (static_cast<std::size_t>(n) >= prefix_.size())
      n = static_cast<int>(prefix_.size()) - 1;
  } else {
    // Invert t_n = t_inf - L r^(n-1) and verify against the neighbors.
    const double u = (t_inf_ - t) / length();  // r^(n-1) at a node
    if (u > 0.0)
      n = std::max(1, 1 + static_cast<int>(std::floor(std::log(u) /
                                                      std::log(ratio_))));
  }
  // Boundary nodes belong to the lower interval (except t_1).
  while (n > 1 && t <= node(n)) --n;
  while (t > node(n + 1)) ++n;
  return n;
}

std::vector<double> Partition::dense_points(int depth, int index_cap) const {
  std::vector<double> base;
  for (int j = 1; j <= index_cap; ++j) base.push_back(node(j));
  base.push_back(t_inf_);

  std::vector<double> all = base;
  std::vector<double> frontier = base;
  for (int k = 0; k < depth; ++k) {
    std::vector<double> next;
    next.reserve(frontier.size() * static_cast<std::size_t>(index_cap));
    for (int i = 1; i <= index_cap; ++i)
      for (double t : frontier) next.push_back(zeta(i, t));
    all.insert(all.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end(),
                        [](double a, double b) {
                          return std::fabs(a - b) < 1e-15;
                        }),
            all.end());
  return all;
}

}  // namespace svf
