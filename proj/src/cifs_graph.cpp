#include "svfractal/cifs_graph.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <random>

#include "svfractal/errors.hpp"
#include "svfractal/parallel.hpp"

namespace svf {

namespace {

double interval_hausdorff(const Interval& a, const Interval& b) {
  return std::max(std::fabs(a.lo - b.lo), std::fabs(a.hi - b.hi));
}

Interval hull_of(const CompactSet& s) { return {s.lo(), s.hi()}; }

Interval sum(const Interval& a, const Interval& b) {
  return {a.lo + b.lo, a.hi + b.hi};
}

}  // namespace

double graph_metric(const GraphPoint& x, const GraphPoint& y) {
  return std::fabs(x.t - y.t) + interval_hausdorff(x.s, y.s);
}

double d_metric(const GraphPoint& x, const GraphPoint& y,
                const SetFunction& fractal) {
  const Interval fx = hull_of(fractal.evaluate(x.t));
  const Interval fy = hull_of(fractal.evaluate(y.t));
  return std::fabs(x.t - y.t) +
         interval_hausdorff(sum(x.s, fy), sum(y.s, fx));
}

GraphPoint apply_G(const FractalSystem& sys, int j, const GraphPoint& x) {
  const Partition& p = sys.partition();
  if (j < 1 || j > p.truncation())
    throw DomainError("CIFS map index beyond truncation");
  const double alpha = sys.alpha();
  const double tj = p.zeta(j, x.t);
  const Interval phi = hull_of(sys.phi().evaluate(tj));
  const Interval b = hull_of(sys.base().evaluate(x.t));
  // alpha*S + Phi(zeta_j(t)) - alpha*B(t), interval arithmetic.
  Interval as{alpha * x.s.lo, alpha * x.s.hi};
  if (alpha < 0) std::swap(as.lo, as.hi);
  Interval ab{alpha * b.lo, alpha * b.hi};
  if (alpha < 0) std::swap(ab.lo, ab.hi);
  return {tj, {as.lo + phi.lo - ab.hi, as.hi + phi.hi - ab.lo}};
}

GraphCloud sample_graph(const SetFunction& f, int size, double t_lo,
                        double t_hi) {
  if (size < 2) throw DomainError("cloud needs at least two points");
  GraphCloud cloud;
  cloud.reserve(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) {
    const double t = t_lo + (t_hi - t_lo) * static_cast<double>(i) / (size - 1);
    cloud.push_back({t, hull_of(f.evaluate(t))});
  }
  return cloud;
}

ContractionReport verify_contraction(const FractalSystem& sys,
                                     const SetFunction& fractal, int samples,
                                     unsigned long long seed) {
  const Partition& p = sys.partition();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ut(p.t1(), p.t_inf());
  std::uniform_real_distribution<double> uy(-2.0, 2.0);
  std::uniform_real_distribution<double> uw(0.0, 1.5);
  ContractionReport rep;
  for (int k = 0; k < samples; ++k) {
    const double y1 = uy(rng), y2 = uy(rng);
    GraphPoint x{ut(rng), {y1, y1 + uw(rng)}};
    GraphPoint y{ut(rng), {y2, y2 + uw(rng)}};
    const double d0 = d_metric(x, y, fractal);
    if (d0 < 1e-12) continue;  // coincident pair, ratio undefined
    for (int j = 1; j <= p.truncation(); ++j) {
      const double bound =
          std::max(std::fabs(sys.alpha()), p.contraction_ratio(j));
      const double d1 =
          d_metric(apply_G(sys, j, x), apply_G(sys, j, y), fractal);
      const double ratio = d1 / d0;
      if (ratio - bound > rep.max_excess) {
        rep.max_excess = ratio - bound;
        rep.max_ratio = ratio;
        rep.bound = bound;
      }
    }
  }
  return rep;
}

namespace {

// Directed sup of min-distances; both clouds must be sorted by t.
// The |t - w| term lower-bounds the metric, which prunes the scan.
double directed_cloud(const GraphCloud& from, const GraphCloud& to) {
  std::atomic<double> sup{0.0};
  parallel_for(from.size(), [&](std::size_t lo, std::size_t hi) {
    double local = 0.0;
    for (std::size_t i = lo; i < hi; ++i) {
      const GraphPoint& x = from[i];
      auto it = std::lower_bound(
          to.begin(), to.end(), x.t,
          [](const GraphPoint& g, double t) { return g.t < t; });
      std::size_t r = static_cast<std::size_t>(it - to.begin());
      std::size_t l = r;
      double best = std::numeric_limits<double>::infinity();
      for (;;) {
        bool advanced = false;
        if (r < to.size() && to[r].t - x.t < best) {
          best = std::min(best, graph_metric(x, to[r]));
          ++r;
          advanced = true;
        }
        if (l > 0 && x.t - to[l - 1].t < best) {
          --l;
          best = std::min(best, graph_metric(x, to[l]));
          advanced = true;
        }
        if (!advanced) break;
      }
      local = std::max(local, best);
    }
    double cur = sup.load();
    while (local > cur && !sup.compare_exchange_weak(cur, local)) {
    }
  });
  return sup.load();
}

}  // namespace

double cloud_hausdorff(const GraphCloud& a, const GraphCloud& b) {
  if (a.empty() || b.empty()) throw DomainError("clouds must be non-empty");
  auto by_t = [](const GraphPoint& x, const GraphPoint& y) {
    return x.t < y.t;
  };
  GraphCloud sa = a, sb = b;
  std::sort(sa.begin(), sa.end(), by_t);
  std::sort(sb.begin(), sb.end(), by_t);
  return std::max(directed_cloud(sa, sb), directed_cloud(sb, sa));
}

double attractor_defect(const FractalSystem& sys, const SetFunction& fractal,
                        int cloud_size) {
  const Partition& p = sys.partition();
  const int N = p.truncation();
  const GraphCloud full =
      sample_graph(fractal, cloud_size, p.t1(), p.t_inf());
  const double cutoff = p.node(N + 1);
  GraphCloud restricted;
  for (const auto& x : full)
    if (x.t <= cutoff) restricted.push_back(x);
  GraphCloud images;
  images.reserve(full.size() * static_cast<std::size_t>(N));
  for (int j = 1; j <= N; ++j)
    for (const auto& x : full) images.push_back(apply_G(sys, j, x));
  return cloud_hausdorff(restricted, images);
}

}  // namespace svf
