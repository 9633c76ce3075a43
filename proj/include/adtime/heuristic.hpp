#pragma once

#include <cstdint>

#include "adtime/report.hpp"
#include "adtime/scenario.hpp"

namespace adtime {

/// Revenue-maximizing price for pair (i, j) when the block budget never
/// binds: alpha * lambda / (t_design * e) = price_cap / e.
Real unconstrained_price(const Scenario& s, int i, int j);

/// Assignment maximizing sum(a * lambda) under the row budgets: each
/// follower takes its M_i largest strictly positive lambdas, ties to the
/// lowest block index. The problem decouples by row, so the greedy pick is
/// the exact optimum.
AssignmentMatrix p5_assignment(const Scenario& s);

/// Low-complexity pipeline: top-lambda assignment, then one constrained
/// price solve at that assignment. Exactly one assignment construction and
/// one primal solve per call.
SolveReport solve_heuristic(const Scenario& s);

/// Baseline: every follower picks min(M_i, #interesting blocks) distinct
/// blocks uniformly among its lambda > 0 blocks (seeded Fisher-Yates), then
/// prices are optimized for that assignment.
SolveReport solve_random_baseline(const Scenario& s, std::uint64_t seed);

}  // namespace adtime
