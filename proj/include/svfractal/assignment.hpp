#ifndef SVFRACTAL_ASSIGNMENT_HPP
#define SVFRACTAL_ASSIGNMENT_HPP

#include <cstddef>
#include <vector>

namespace svf {

// Exact minimal-cost perfect matching on a dense square cost matrix
// (shortest augmenting path with dual potentials, O(n^3)).
// cost[i * n + j] is the cost of pairing row i with column j.
// Returns the column assigned to each row.
std::vector<std::size_t> solve_assignment(const std::vector<double>& cost,
                                          std::size_t n);

double assignment_cost(const std::vector<double>& cost, std::size_t n,
                       const std::vector<std::size_t>& row_to_col);

}  // namespace svf

#endif
