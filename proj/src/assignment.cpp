#include "svfractal/assignment.hpp"

#include <limits>

#include "svfractal/errors.hpp"

namespace svf {

// Jonker-Volgenant style row-by-row augmentation.  Potentials keep
// reduced costs non-negative, so each augmentation is a Dijkstra pass.
std::vector<std::size_t> solve_assignment(const std::vector<double>& cost,
                                          std::size_t n) {
  if (n == 0 || cost.size() != n * n)
    throw DomainError("assignment needs a dense n x n cost matrix");
  const double inf = std::numeric_limits<double>::infinity();
  // 1-based internal indexing; col_to_row[0] is the virtual source row.
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<std::size_t> col_to_row(n + 1, 0);
  std::vector<std::size_t> prev_col(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    col_to_row[0] = i;
    std::size_t j0 = 0;
    std::vector<double> min_dist(n + 1, inf);
    std::vector<bool> used(n + 1, false);
    do {
      used[j0] = true;
      const std::size_t i0 = col_to_row[j0];
      double delta = inf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double cur = cost[(i0 - 1) * n + (j - 1)] - u[i0] - v[j];
        if (cur < min_dist[j]) {
          min_dist[j] = cur;
          prev_col[j] = j0;
        }
        if (min_dist[j] < delta) {
          delta = min_dist[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[col_to_row[j]] += delta;
          v[j] -= delta;
        } else {
          min_dist[j] -= delta;
        }
      }
      j0 = j1;
    } while (col_to_row[j0] != 0);
    // Augment along the found path.
    while (j0 != 0) {
      const std::size_t j1 = prev_col[j0];
      col_to_row[j0] = col_to_row[j1];
      j0 = j1;
    }
  }
  std::vector<std::size_t> row_to_col(n);
  for (std::size_t j = 1; j <= n; ++j)
    row_to_col[col_to_row[j] - 1] = j - 1;
  return row_to_col;
}

double assignment_cost(const std::vector<double>& cost, std::size_t n,
                       const std::vector<std::size_t>& row_to_col) {
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) total += cost[i * n + row_to_col[i]];
  return total;
}

}  // namespace svf
