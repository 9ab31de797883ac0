#include "svfractal/dimension.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <unordered_set>

#include "svfractal/errors.hpp"

namespace svf {

RatioSequence RatioSequence::from_system(const FractalSystem& sys, Kind kind,
                                         int count) {
  const double a = std::fabs(sys.alpha());
  std::vector<double> v;
  v.reserve(static_cast<std::size_t>(count));
  for (int i = 1; i <= count; ++i) {
    const double ai = sys.partition().contraction_ratio(i);
    v.push_back(kind == Kind::Lower ? std::min(a, ai) : std::max(a, ai));
  }
  return RatioSequence(std::move(v));
}

RatioSequence RatioSequence::explicit_values(std::vector<double> values) {
  for (double x : values)
    if (!(x > 0.0 && x < 1.0))
      throw DomainError("ratio values must lie in (0,1)");
  return RatioSequence(std::move(values));
}

double RatioSequence::value(int i) const {
  if (i < 1 || static_cast<std::size_t>(i) > values_.size())
    throw DomainError("ratio index out of range");
  return values_[static_cast<std::size_t>(i) - 1];
}

std::vector<double> RatioSequence::prefix(int k) const {
  if (k < 1 || static_cast<std::size_t>(k) > values_.size())
    throw DomainError("prefix length out of range");
  return {values_.begin(), values_.begin() + k};
}

double moran_solve_finite(const std::vector<double>& b, double tol) {
  if (b.size() < 2) throw DomainError("Moran prefix needs k >= 2");
  for (double x : b)
    if (!(x > 0.0 && x < 1.0))
      throw DomainError("degenerate ratio outside (0,1)");
  auto f = [&](double s) {
    double sum = 0.0;
    for (double x : b) sum += std::pow(x, s);
    return sum - 1.0;
  };
  // f is strictly decreasing with f(0) = k - 1 > 0; expand until f < 0.
  double lo = 0.0, hi = 1.0;
  while (f(hi) > 0.0) hi *= 2.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double v = f(mid);
    if (std::fabs(v) <= tol) return mid;
    (v > 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

SStarResult s_star(const RatioSequence& b, int k_max, double stall_tol) {
  SStarResult out;
  k_max = std::min(k_max, b.size());
  if (k_max < 2) throw DomainError("s_star needs at least two ratios");
  double prev = -std::numeric_limits<double>::infinity();
  for (int k = 2; k <= k_max; ++k) {
    const double sk = moran_solve_finite(b.prefix(k));
    if (sk < prev - 1e-9)
      throw Error("Moran sequence lost monotonicity (solver bug)");
    out.s_k.push_back(sk);
    if (k > 2 && sk - prev < stall_tol) {
      out.stalled = true;
      out.s_star = sk;
      return out;
    }
    prev = sk;
  }
  out.s_star = out.s_k.back();
  return out;
}

double s_upper(const RatioSequence& c, int k_max, double tol) {
  k_max = std::min(k_max, c.size());
  if (k_max < 2) throw DomainError("s_upper needs at least two ratios");
  const std::vector<double> prefix = c.prefix(k_max);
  // Bounded-below sequences make the series diverge for every s.
  const int window = std::min<int>(8, k_max - 1);
  double ratio = 0.0;
  for (int i = k_max - window; i < k_max; ++i)
    ratio = std::max(ratio, prefix[i] / prefix[i - 1]);
  if (ratio >= 1.0 - 1e-9) return std::numeric_limits<double>::infinity();

  // Tail sum bounded by the geometric envelope with the observed ratio:
  // sum_{i>k} c_i^s <= c_k^s * r^s / (1 - r^s).
  auto series = [&](double s) {
    double sum = 0.0;
    for (double x : prefix) sum += std::pow(x, s);
    const double rs = std::pow(ratio, s);
    if (rs >= 1.0) return std::numeric_limits<double>::infinity();
    return sum + std::pow(prefix.back(), s) * rs / (1.0 - rs);
  };
  double lo = 0.0, hi = 1.0;
  while (series(hi) > 1.0) {
    hi *= 2.0;
    if (hi > 1e6) return std::numeric_limits<double>::infinity();
  }
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double v = series(mid) - 1.0;
    if (std::fabs(v) <= tol) {
      lo = hi = mid;
      break;
    }
    (v > 0.0 ? lo : hi) = mid;
  }
  return std::max(0.5 * (lo + hi), 1.0);
}

double box_count_estimate(const GraphCloud& cloud,
                          const std::vector<double>& scales) {
  if (scales.size() < 3)
    throw DomainError("box counting needs at least three scales");
  if (cloud.empty()) throw DomainError("empty cloud");
  double t_min = cloud.front().t, y_min = cloud.front().s.lo;
  for (const auto& x : cloud) {
    t_min = std::min(t_min, x.t);
    y_min = std::min(y_min, x.s.lo);
  }
  std::vector<double> log_inv_delta, log_count;
  for (double delta : scales) {
    if (!(delta > 0.0)) throw DomainError("scales must be positive");
    std::unordered_set<std::uint64_t> cells;
    for (const auto& x : cloud) {
      const auto col =
          static_cast<std::uint64_t>(std::floor((x.t - t_min) / delta));
      const auto row_lo =
          static_cast<std::int64_t>(std::floor((x.s.lo - y_min) / delta));
      const auto row_hi =
          static_cast<std::int64_t>(std::floor((x.s.hi - y_min) / delta));
      for (std::int64_t row = row_lo; row <= row_hi; ++row)
        cells.insert((col << 32) ^ static_cast<std::uint64_t>(row + (1 << 30)));
    }
    log_inv_delta.push_back(std::log(1.0 / delta));
    log_count.push_back(std::log(static_cast<double>(cells.size())));
  }
  // Least-squares slope.
  const std::size_t m = scales.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < m; ++i) {
    sx += log_inv_delta[i];
    sy += log_count[i];
    sxx += log_inv_delta[i] * log_inv_delta[i];
    sxy += log_inv_delta[i] * log_count[i];
  }
  const double denom = m * sxx - sx * sx;
  if (std::fabs(denom) < 1e-30) throw DomainError("degenerate scale set");
  return (m * sxy - sx * sy) / denom;
}

}  // namespace svf
