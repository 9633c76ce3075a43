#include "adtime/model.hpp"

#include <cmath>
#include <stdexcept>

#include "adtime/errors.hpp"

namespace adtime {

namespace {

void check_indices(const Scenario& s, int i, int j) {
  if (i < 0 || i >= s.n_followers || j < 0 || j >= s.m_blocks)
    throw std::out_of_range("follower/block index out of range");
}

void check_shape(const Scenario& s, std::size_t rows, std::size_t cols,
                 const char* what) {
  if (rows != static_cast<std::size_t>(s.n_followers) ||
      cols != static_cast<std::size_t>(s.m_blocks))
    throw validation_error(std::string(what) +
                           ": shape does not match the scenario");
}

}  // namespace

Real satisfaction(const Scenario& s, int i, int j, Real t) {
  check_indices(s, i, j);
  if (t < 0.0) throw std::invalid_argument("satisfaction: t must be >= 0");
  return s.lambda(i, j) *
         (1.0 - std::exp(-s.alpha[j] * t / s.t_design(i, j)));
}

Real follower_utility(const Scenario& s, const PriceMatrix& prices,
                      const AssignmentMatrix& assignment,
                      const TimeMatrix& times, int i) {
  check_indices(s, i, 0);
  check_shape(s, prices.rows(), prices.cols(), "prices");
  check_shape(s, assignment.rows(), assignment.cols(), "assignment");
  check_shape(s, times.rows(), times.cols(), "times");
  Real u = 0.0;
  for (int j = 0; j < s.m_blocks; ++j)
    if (assignment(i, j))
      u += satisfaction(s, i, j, times(i, j)) - prices(i, j) * times(i, j);
  return u;
}

Real price_cap(const Scenario& s, int i, int j) {
  check_indices(s, i, j);
  return s.lambda(i, j) * s.alpha[j] / s.t_design(i, j);
}

Real follower_best_response(const Scenario& s, int i, int j, Real price) {
  check_indices(s, i, j);
  if (s.lambda(i, j) <= 0.0)
    throw not_a_participant_error(
        "follower_best_response: lambda == 0, follower not interested");
  if (price <= 0.0)
    throw invalid_price_error(
        "follower_best_response: price must be > 0 (response diverges)");
  const Real cap = price_cap(s, i, j);
  if (price >= cap) return 0.0;
  return (s.t_design(i, j) / s.alpha[j]) * std::log(cap / price);
}

Real leader_revenue(const Scenario& s, const PriceMatrix& prices,
                    const AssignmentMatrix& assignment) {
  check_shape(s, prices.rows(), prices.cols(), "prices");
  check_shape(s, assignment.rows(), assignment.cols(), "assignment");
  Real revenue = 0.0;
  for (int i = 0; i < s.n_followers; ++i)
    for (int j = 0; j < s.m_blocks; ++j) {
      if (!assignment(i, j)) continue;
      if (s.lambda(i, j) <= 0.0)
        throw not_a_participant_error(
            "leader_revenue: assignment selects a pair with lambda == 0");
      revenue += prices(i, j) * follower_best_response(s, i, j, prices(i, j));
    }
  return revenue;
}

void validate_assignment(const Scenario& s, const AssignmentMatrix& a) {
  check_shape(s, a.rows(), a.cols(), "assignment");
  for (int i = 0; i < s.n_followers; ++i) {
    int used = 0;
    for (int j = 0; j < s.m_blocks; ++j) {
      if (a(i, j) > 1)
        throw validation_error("assignment: entries must be 0 or 1");
      if (a(i, j)) {
        ++used;
        if (s.lambda(i, j) <= 0.0)
          throw validation_error(
              "assignment: selects a pair with lambda == 0");
      }
    }
    if (used > s.block_budget[i])
      throw validation_error("assignment: row " + std::to_string(i) +
                             " exceeds its block budget");
  }
}

}  // namespace adtime
