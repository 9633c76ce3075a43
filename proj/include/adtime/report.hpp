#pragma once

#include <string>
#include <utility>
#include <vector>

#include "adtime/grid.hpp"
#include "adtime/scenario.hpp"

namespace adtime {

/// Outcome of one solver run. leader_revenue always equals
/// sum(a * p * t) recomputed from the stored matrices.
struct SolveReport {
  std::string algorithm;
  AssignmentMatrix assignment;
  PriceMatrix prices;
  TimeMatrix times;
  Real leader_revenue = 0.0;
  std::vector<Real> follower_utilities;
  int iterations = 0;
  std::vector<std::pair<Real, Real>> bound_trace;  // (LB, UB), GBD only
  bool converged = true;
  double wall_time_ms = 0.0;
};

Real sum_utility(const SolveReport& r);

/// Final UB - LB for GBD reports, 0 otherwise.
Real final_gap(const SolveReport& r);

/// Deterministic JSON rendering. Wall time is emitted only when
/// with_timings is set, so identical runs produce identical bytes.
std::string report_to_json(const SolveReport& r, bool with_timings = false);

/// Assembles a report from solver output; recomputes revenue and the
/// follower utilities from the matrices.
SolveReport make_report(std::string algorithm, const Scenario& s,
                        const AssignmentMatrix& a, const PriceMatrix& p,
                        const TimeMatrix& t, int iterations);

}  // namespace adtime
