#pragma once

#include "adtime/report.hpp"
#include "adtime/scenario.hpp"

namespace adtime {

/// Instances enumerable by the oracle: N * M <= this.
inline constexpr int kOracleSizeLimit = 20;

/// Ground truth by brute force: enumerates every feasible assignment in
/// lexicographic order, prices each with solve_primal, returns the best
/// (ties to the lexicographically smallest assignment). OpenMP-parallel
/// over assignments; the reduction is deterministic by construction.
SolveReport oracle_solve(const Scenario& s);

/// Single-threaded reference of oracle_solve; must produce a bitwise
/// identical report.
SolveReport oracle_solve_serial(const Scenario& s);

struct EquilibriumCheck {
  Real follower_violation = 0.0;  // best unilateral time deviation gain
  Real leader_violation = 0.0;    // best enumerated (a, price-grid) gain
  bool leader_checked = false;
};

/// Checks the equilibrium conditions on a report. The follower condition
/// grids each assigned pair's utility over time (the followers' game is
/// separable, so unilateral deviations are exact). The leader condition
/// enumerates assignments and per-block price grids within the budget; it is
/// only available on oracle-sized instances with few followers.
EquilibriumCheck verify_equilibrium(const Scenario& s, const SolveReport& r,
                                    int grid_density);

}  // namespace adtime
