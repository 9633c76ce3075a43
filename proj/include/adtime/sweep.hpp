#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "adtime/gbd.hpp"
#include "adtime/report.hpp"
#include "adtime/scenario.hpp"

namespace adtime {

enum class Algorithm { Gbd, Heuristic, Random, Oracle };

std::string algorithm_name(Algorithm a);
Algorithm algorithm_from_name(const std::string& name);

struct SweepRow {
  std::uint64_t seed = 0;
  Algorithm algorithm = Algorithm::Gbd;
  std::string sweep_param;  // "T", "alpha_scale", "none"
  Real param_value = 0.0;
  Real revenue = 0.0;
  Real sum_utility = 0.0;
  int iterations = 0;
  Real gap = 0.0;
  double wall_time_ms = 0.0;
};

struct SweepRequest {
  GenSpec base;
  std::string sweep_param;       // which GenSpec field the values override
  std::vector<Real> values;      // ascending; empty only for "none"
  std::vector<Algorithm> algorithms;
  std::vector<std::uint64_t> seeds;
  GbdConfig gbd;
  bool parallel = true;
};

/// Runs every (seed, value, algorithm) task; rows come back in exactly that
/// order no matter how the tasks were scheduled. sweep_param must be "T"
/// (batch duration), "alpha_scale" (density), or "none" (plain comparison).
std::vector<SweepRow> run_sweep(const SweepRequest& req);

/// Mean revenue / sum-utility over seeds per (value, algorithm), in
/// (value, algorithm) order.
struct SummaryRow {
  Algorithm algorithm = Algorithm::Gbd;
  std::string sweep_param;
  Real param_value = 0.0;
  Real mean_revenue = 0.0;
  Real mean_sum_utility = 0.0;
};
std::vector<SummaryRow> summarize(const std::vector<SweepRow>& rows);

/// Header: scenario_seed,algorithm,sweep_param,param_value,revenue,
/// sum_utility,iterations,gap,wall_time_ms. Without with_timings the wall
/// time column is 0.000 so reruns are byte-identical.
std::string rows_to_csv(const std::vector<SweepRow>& rows,
                        bool with_timings = false);
std::string summary_to_csv(const std::vector<SummaryRow>& rows);

}  // namespace adtime
