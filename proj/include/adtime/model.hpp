#pragma once

#include "adtime/grid.hpp"
#include "adtime/scenario.hpp"

namespace adtime {

/// Follower i's satisfaction from t time units in block j:
///   lambda * (1 - exp(-alpha_j * t / t_design)).
/// Zero at t = 0, increasing, saturating at lambda.
Real satisfaction(const Scenario& s, int i, int j, Real t);

/// Utility of follower i: sum over assigned blocks of satisfaction minus
/// payment, S(t) - p * t.
Real follower_utility(const Scenario& s, const PriceMatrix& prices,
                      const AssignmentMatrix& assignment,
                      const TimeMatrix& times, int i);

/// Largest unit price at which follower i still rents block j. Above it the
/// follower's best response is zero time (it backs off). lambda = 0 gives 0.
Real price_cap(const Scenario& s, int i, int j);

/// The follower sub-game optimum for pair (i, j) at unit price p > 0:
///   max(0, (t_design / alpha_j) * ln(price_cap / p)).
/// Requires lambda > 0 (not_a_participant_error) and p > 0
/// (invalid_price_error: the response is unbounded as p -> 0).
Real follower_best_response(const Scenario& s, int i, int j, Real price);

/// Manager revenue with followers best-responding: for every assigned pair,
/// p * t*(p). Prices must be positive on assigned pairs and assignments must
/// avoid lambda = 0 pairs.
Real leader_revenue(const Scenario& s, const PriceMatrix& prices,
                    const AssignmentMatrix& assignment);

/// Assignment feasibility: binary entries, per-row budget, no lambda = 0
/// pair selected. Throws validation_error.
void validate_assignment(const Scenario& s, const AssignmentMatrix& a);

}  // namespace adtime
