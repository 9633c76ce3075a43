#pragma once

#include <cstdint>
#include <vector>

#include "adtime/grid.hpp"
#include "adtime/scenario.hpp"

namespace adtime {

/// Solution of the price problem at a fixed assignment, with the full KKT
/// certificate: beta for the per-block time budgets, gamma for the price
/// caps, nu for the coupling constraint that pins unassigned pairs at their
/// caps.
struct PrimalSolution {
  PriceMatrix prices;
  TimeMatrix times;
  Real objective = 0.0;
  std::vector<Real> beta;  // per block
  RealGrid gamma;          // N x M
  RealGrid nu;             // N x M
  Real kkt_residual = 0.0;
};

/// Maximizes sum over assigned pairs of p * t*(p) subject to the per-block
/// budget sum(t) <= T_j and p <= price_cap. Unassigned pairs are fixed at
/// p = price_cap (forcing t = 0); lambda = 0 pairs stay at p = 0.
///
/// Per block: if the budget is slack at the closed-form prices cap/e the
/// block is done; otherwise an outer bisection on beta drives sum(t(beta))
/// to T_j, with an inner bisection per pair on
///   h(p) = ln(cap/p) - 1 + beta/p,
/// which is strictly decreasing in p for beta >= 0. The primal is always
/// feasible (caps give t = 0), so no feasibility cuts exist in this
/// decomposition.
PrimalSolution solve_primal(const Scenario& s, const AssignmentMatrix& a);

/// Max violation over KKT stationarity, primal and dual feasibility, and
/// complementary slackness. 0 for an empty assignment.
Real kkt_residuals(const Scenario& s, const AssignmentMatrix& a,
                   const PrimalSolution& sol);

/// Number of solve_primal calls in this process (cost instrumentation).
std::uint64_t primal_solve_count();

}  // namespace adtime
