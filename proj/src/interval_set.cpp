#include "svfractal/interval_set.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "svfractal/errors.hpp"

namespace svf {

namespace {

double merge_tolerance(const std::vector<Interval>& parts) {
  double scale = 1.0;
  for (const auto& p : parts)
    scale = std::max({scale, std::fabs(p.lo), std::fabs(p.hi)});
  return CompactSet::kMergeEps * scale;
}

}  // namespace

CompactSet::CompactSet(double lo, double hi) {
  if (!(lo <= hi) || !std::isfinite(lo) || !std::isfinite(hi))
    throw DomainError("invalid interval endpoints");
  parts_.push_back({lo, hi});
}

CompactSet CompactSet::from_parts(std::vector<Interval> parts) {
  if (parts.empty()) throw DomainError("CompactSet must be non-empty");
  for (const auto& p : parts) {
    if (!(p.lo <= p.hi) || !std::isfinite(p.lo) || !std::isfinite(p.hi))
      throw DomainError("invalid interval endpoints");
  }
  std::sort(parts.begin(), parts.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  const double eps = merge_tolerance(parts);
  CompactSet out;
  out.parts_.push_back(parts.front());
  for (std::size_t i = 1; i < parts.size(); ++i) {
    Interval& last = out.parts_.back();
    if (parts[i].lo <= last.hi + eps) {
      last.hi = std::max(last.hi, parts[i].hi);
    } else {
      out.parts_.push_back(parts[i]);
    }
  }
  return out;
}

std::string CompactSet::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << " U ";
    os << "[" << parts_[i].lo << "," << parts_[i].hi << "]";
  }
  return os.str();
}

CompactSet minkowski_sum(const CompactSet& a, const CompactSet& b) {
  std::vector<Interval> sums;
  sums.reserve(a.part_count() * b.part_count());
  for (const auto& pa : a.parts())
    for (const auto& pb : b.parts())
      sums.push_back({pa.lo + pb.lo, pa.hi + pb.hi});
  return CompactSet::from_parts(std::move(sums));
}

CompactSet scale(double k, const CompactSet& a) {
  if (k == 0.0) return CompactSet(0.0);
  std::vector<Interval> parts;
  parts.reserve(a.part_count());
  for (const auto& p : a.parts()) {
    double x = k * p.lo, y = k * p.hi;
    if (k < 0) std::swap(x, y);
    parts.push_back({x, y});
  }
  return CompactSet::from_parts(std::move(parts));
}

CompactSet set_difference(const CompactSet& a, const CompactSet& b) {
  return minkowski_sum(a, scale(-1.0, b));
}

double point_distance(double x, const CompactSet& a) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& p : a.parts()) {
    double d = 0.0;
    if (x < p.lo)
      d = p.lo - x;
    else if (x > p.hi)
      d = x - p.hi;
    best = std::min(best, d);
    if (best == 0.0) break;
  }
  return best;
}

namespace {

// sup over x in a of dist(x, b).
double directed_hausdorff(const CompactSet& a, const CompactSet& b) {
  double sup = 0.0;
  for (const auto& p : a.parts()) {
    sup = std::max(sup, point_distance(p.lo, b));
    sup = std::max(sup, point_distance(p.hi, b));
  }
  // Interior maxima of dist(., b) sit at midpoints of b's gaps.
  const auto& bp = b.parts();
  for (std::size_t i = 0; i + 1 < bp.size(); ++i) {
    const double mid = 0.5 * (bp[i].hi + bp[i + 1].lo);
    for (const auto& p : a.parts()) {
      if (p.lo <= mid && mid <= p.hi) {
        sup = std::max(sup, point_distance(mid, b));
        break;
      }
    }
  }
  return sup;
}

}  // namespace

double hausdorff_distance(const CompactSet& a, const CompactSet& b) {
  return std::max(directed_hausdorff(a, b), directed_hausdorff(b, a));
}

double diameter(const CompactSet& a) { return a.hi() - a.lo(); }

double norm_to_zero(const CompactSet& a) {
  return std::max(std::fabs(a.lo()), std::fabs(a.hi()));
}

bool subset_leq(const CompactSet& a, const CompactSet& b, double eps) {
  for (const auto& pa : a.parts()) {
    bool covered = false;
    for (const auto& pb : b.parts()) {
      if (pb.lo - eps <= pa.lo && pa.hi <= pb.hi + eps) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  return true;
}

CompactSet convex_hull(const CompactSet& a, const CompactSet& b) {
  return CompactSet(std::min(a.lo(), b.lo()), std::max(a.hi(), b.hi()));
}

bool operator==(const CompactSet& a, const CompactSet& b) {
  if (a.part_count() != b.part_count()) return false;
  for (std::size_t i = 0; i < a.part_count(); ++i) {
    if (a.parts()[i].lo != b.parts()[i].lo) return false;
    if (a.parts()[i].hi != b.parts()[i].hi) return false;
  }
  return true;
}

}  // namespace svf
