#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "adtime/grid.hpp"

namespace adtime {

/// One problem instance: N advertisers (followers) renting time on M city
/// blocks from the block manager (leader).
struct Scenario {
  int n_followers = 0;  // N
  int m_blocks = 0;     // M
  std::vector<Real> batch_duration;  // T_j per block, > 0
  std::vector<int> block_budget;     // M_i per follower, 0..M
  RealGrid lambda;                   // N x M, >= 0 (0 = not interested)
  RealGrid t_design;                 // N x M, > 0
  std::vector<Real> alpha;           // per block, >= 1
};

/// Throws validation_error naming the first offending field.
void validate(const Scenario& s);

/// Parameters for seeded random instance generation. Defaults follow the
/// experiment protocol: 5 followers, 15 blocks, t_design ~ U(1e-3, 4],
/// lambda ~ U[0, 10], per-block vehicle counts ~ U{1..30} mapped to density
/// alpha = 1 + alpha_scale * vehicles, a common batch duration for every
/// block, and per-follower block budgets ~ U{1..M}.
struct GenSpec {
  int n_followers = 5;
  int m_blocks = 15;
  Real t_design_max = 4.0;
  Real t_design_floor = 1e-3;  // draws below this are resampled
  Real lambda_max = 10.0;
  int vehicles_min = 1;
  int vehicles_max = 30;
  Real alpha_scale = 1.0 / 15.0;
  Real batch_duration = 2.0;
  int budget_min = 1;
  int budget_max = -1;  // -1: use m_blocks
  std::uint64_t seed = 1;
};

/// Deterministic given spec.seed. Draw order is part of the contract:
/// lambda row-major, then t_design row-major (resampling below the floor),
/// then vehicles per block, then budgets per follower.
Scenario generate(const GenSpec& spec);

GenSpec load_gen_spec(const std::filesystem::path& path);

Scenario load_scenario(const std::filesystem::path& path);
void save_scenario(const Scenario& s, const std::filesystem::path& path);

/// JSON forms used by the CLI (schema identical to the file contents).
std::string scenario_to_json(const Scenario& s);
Scenario scenario_from_json(const std::string& text);

}  // namespace adtime
