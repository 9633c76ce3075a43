#pragma once

#include "adtime/report.hpp"
#include "adtime/scenario.hpp"

namespace adtime {

struct GbdConfig {
  Real epsilon = 1e-6;      // absolute gap target; also used relatively
  int max_iterations = 100;
  bool warm_start = true;   // start from the top-lambda assignment
};

/// Generalized Benders decomposition: alternates the convex price primal
/// (lower bounds + multipliers) with the max-min cut master (upper bounds)
/// until UB - LB < epsilon, the iteration budget runs out, or the master
/// exhausts the assignment lattice. Returns the best-lower-bound incumbent;
/// bound_trace holds one (LB, UB) pair per iteration.
SolveReport solve_gbd(const Scenario& s, const GbdConfig& config = {});

}  // namespace adtime
