#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "adtime/grid.hpp"
#include "adtime/scenario.hpp"

namespace adtime {

/// One Benders cut: delta <= constant + sum coeff[i][j] * a[i][j].
/// constant collects every assignment-independent Lagrangian term of one
/// primal solve; coeff[i][j] = nu[i][j] * T_j >= 0.
struct BendersCut {
  Real constant = 0.0;
  RealGrid coeff;
};

struct MasterSolution {
  Real delta = 0.0;
  AssignmentMatrix assignment;
  std::int64_t nodes_explored = 0;
};

/// Entries fixed to 0/1; kFree marks undecided entries.
inline constexpr std::int8_t kFree = -1;
using PartialAssignment = Grid<std::int8_t>;

/// Admissible bound for branch and bound: min over cuts of the largest value
/// that cut alone can reach from the partial assignment, completing each row
/// greedily with its largest non-negative coefficients within the remaining
/// budget. Never below the best feasible completion.
Real cut_upper_bound(const Scenario& s, const std::vector<BendersCut>& cuts,
                     const PartialAssignment& partial);

/// Exact max-min assignment: maximizes delta = min over cuts subject to the
/// row budgets, binary entries, the lambda = 0 exclusion, and a "not in
/// `excluded`" rule that keeps the decomposition from revisiting
/// assignments. Ties resolve to the lexicographically smallest flattened
/// assignment. Throws lattice_exhausted_error when `excluded` covers the
/// whole feasible lattice.
MasterSolution solve_master(const Scenario& s,
                            const std::vector<BendersCut>& cuts,
                            const std::set<AssignmentMatrix>& excluded);

}  // namespace adtime
