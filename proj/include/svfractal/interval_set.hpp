#ifndef SVFRACTAL_INTERVAL_SET_HPP
#define SVFRACTAL_INTERVAL_SET_HPP

#include <string>
#include <vector>

namespace svf {

// Closed bounded interval [lo, hi], lo <= hi, both finite.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

// A non-empty compact subset of the reals stored as a finite union of
// disjoint closed intervals in canonical form: parts sorted, pairwise
// separated by a gap larger than the merge tolerance.
//
// Values are immutable after construction; all operations return new sets.
class CompactSet {
public:
  // Relative tolerance under which near-touching parts are merged.
  static constexpr double kMergeEps = 1e-12;
  // Slack used by subset tests.
  static constexpr double kContainmentEps = 1e-9;

  explicit CompactSet(double point) : parts_{{point, point}} {}
  CompactSet(double lo, double hi);
  static CompactSet from_parts(std::vector<Interval> parts);

  const std::vector<Interval>& parts() const { return parts_; }
  std::size_t part_count() const { return parts_.size(); }
  double lo() const { return parts_.front().lo; }
  double hi() const { return parts_.back().hi; }
  bool is_interval() const { return parts_.size() == 1; }
  Interval hull() const { return {lo(), hi()}; }

  // "[a,b] U [c,d]" diagnostic form.
  std::string to_string() const;

private:
  CompactSet() = default;
  std::vector<Interval> parts_;
};

// Minkowski sum {x + y : x in a, y in b}.
CompactSet minkowski_sum(const CompactSet& a, const CompactSet& b);

// {k*x : x in a}; k = 0 collapses to {0}.
CompactSet scale(double k, const CompactSet& a);

// Element-wise difference {x - y}, i.e. a + (-1)*b.
CompactSet set_difference(const CompactSet& a, const CompactSet& b);

// Exact Hausdorff distance.  The directed sup of dist(., b) over a is
// attained at a part endpoint of a or at a gap midpoint of b lying inside a.
double hausdorff_distance(const CompactSet& a, const CompactSet& b);

// sup{|t - w| : t, w in a} = hi - lo.
double diameter(const CompactSet& a);

// H_d(a, {0}) = max(|lo|, |hi|).
double norm_to_zero(const CompactSet& a);

// True iff every part of a lies inside some part of b, within eps.
bool subset_leq(const CompactSet& a, const CompactSet& b,
                double eps = CompactSet::kContainmentEps);

// Distance from a point to the set (0 when inside).
double point_distance(double x, const CompactSet& a);

// Convex hull of the union of a and b (used by the hull interpolation
// fallback in SetFunction).
CompactSet convex_hull(const CompactSet& a, const CompactSet& b);

bool operator==(const CompactSet& a, const CompactSet& b);

}  // namespace svf

#endif
