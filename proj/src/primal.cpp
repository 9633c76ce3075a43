#include "adtime/primal.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>

#include "adtime/errors.hpp"
#include "adtime/model.hpp"

namespace adtime {

namespace {

constexpr Real kE = 2.718281828459045;
constexpr int kMaxBisectIters = 200;

std::atomic<std::uint64_t> g_solve_count{0};

/// Root of h(p) = ln(cap/p) - 1 + beta/p on [cap/e, cap]; h is strictly
/// decreasing there, h(cap/e) = beta*e/cap >= 0 and h(cap) = beta/cap - 1.
/// For beta >= cap the optimum sits on the cap (t = 0). The bracket is
/// bisected to machine precision relative to the price scale (about 50
/// halvings), which keeps the stationarity residual near roundoff even for
/// the extreme caps that tiny t_design values produce.
Real price_for_beta(Real cap, Real beta) {
  if (beta >= cap) return cap;
  Real lo = cap / kE;
  Real hi = cap;
  if (beta == 0.0) return lo;
  const Real eps = std::numeric_limits<Real>::epsilon();
  for (int it = 0; it < kMaxBisectIters; ++it) {
    if (hi - lo <= hi * eps) break;
    const Real mid = 0.5 * (lo + hi);
    const Real h = std::log(cap / mid) - 1.0 + beta / mid;
    if (h > 0.0)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

struct BlockPair {
  int follower;
  Real cap;
  Real time_scale;  // t_design / alpha
};

Real block_total_time(const std::vector<BlockPair>& pairs, Real beta) {
  Real total = 0.0;
  for (const auto& q : pairs) {
    const Real p = price_for_beta(q.cap, beta);
    total += q.time_scale * std::log(q.cap / p);
  }
  return total;
}

}  // namespace

PrimalSolution solve_primal(const Scenario& s, const AssignmentMatrix& a) {
  validate(s);
  validate_assignment(s, a);
  g_solve_count.fetch_add(1, std::memory_order_relaxed);

  const int n = s.n_followers;
  const int m = s.m_blocks;
  PrimalSolution sol;
  sol.prices = PriceMatrix(n, m, 0.0);
  sol.times = TimeMatrix(n, m, 0.0);
  sol.beta.assign(m, 0.0);
  sol.gamma = RealGrid(n, m, 0.0);
  sol.nu = RealGrid(n, m, 0.0);

  // Every pair starts pinned at its cap with t = 0; lambda = 0 pairs keep
  // cap = 0 and never enter the optimization.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) sol.prices(i, j) = price_cap(s, i, j);

  for (int j = 0; j < m; ++j) {
    std::vector<BlockPair> pairs;
    for (int i = 0; i < n; ++i)
      if (a(i, j))
        pairs.push_back({i, price_cap(s, i, j),
                         s.t_design(i, j) / s.alpha[j]});
    if (pairs.empty()) continue;

    const Real budget = s.batch_duration[j];
    Real beta = 0.0;
    // At beta = 0 each pair takes its closed-form price cap/e and time
    // t_design/alpha; bind the budget only if that total overshoots.
    Real slack_total = 0.0;
    for (const auto& q : pairs) slack_total += q.time_scale;
    if (slack_total > budget) {
      Real lo = 0.0, hi = 1.0;
      while (block_total_time(pairs, hi) > budget) {
        lo = hi;
        hi *= 2.0;
        if (hi > 1e300) break;
      }
      const Real eps = std::numeric_limits<Real>::epsilon();
      for (int it = 0; it < kMaxBisectIters; ++it) {
        if (hi - lo <= hi * eps) break;
        const Real mid = 0.5 * (lo + hi);
        if (block_total_time(pairs, mid) > budget)
          lo = mid;
        else
          hi = mid;
      }
      beta = 0.5 * (lo + hi);
    }
    sol.beta[j] = beta;

    for (const auto& q : pairs) {
      const Real p = price_for_beta(q.cap, beta);
      const Real t = q.time_scale * std::log(q.cap / p);
      sol.prices(q.follower, j) = p;
      sol.times(q.follower, j) = t;
      sol.objective += p * t;
      // Stationarity certificate when the cap binds: the whole multiplier
      // mass goes to gamma (nu stays 0 on assigned pairs).
      if (beta >= q.cap)
        sol.gamma(q.follower, j) = q.time_scale * (beta / q.cap - 1.0);
    }

    // Unassigned pairs in this block sit at p = cap with t = 0. Their
    // stationarity needs (beta + nu)/cap - 1 = gamma/time_scale; take the
    // smallest nu >= 0 and let gamma absorb any remainder.
    for (int i = 0; i < n; ++i) {
      if (a(i, j) || s.lambda(i, j) <= 0.0) continue;
      const Real cap = price_cap(s, i, j);
      const Real scale = s.t_design(i, j) / s.alpha[j];
      sol.nu(i, j) = std::max(0.0, cap - beta);
      sol.gamma(i, j) = scale * std::max(0.0, beta / cap - 1.0);
    }
  }

  sol.kkt_residual = kkt_residuals(s, a, sol);
  return sol;
}

Real kkt_residuals(const Scenario& s, const AssignmentMatrix& a,
                   const PrimalSolution& sol) {
  const int n = s.n_followers;
  const int m = s.m_blocks;
  Real worst = 0.0;
  auto track = [&](Real v) { worst = std::max(worst, v); };

  for (int j = 0; j < m; ++j) {
    Real total_time = 0.0;
    for (int i = 0; i < n; ++i) total_time += sol.times(i, j);
    track(std::max(0.0, total_time - s.batch_duration[j]));  // C2~
    track(std::max(0.0, -sol.beta[j]));
    track(std::abs(sol.beta[j] * (total_time - s.batch_duration[j])));

    for (int i = 0; i < n; ++i) {
      if (s.lambda(i, j) <= 0.0) continue;
      const Real cap = price_cap(s, i, j);
      const Real scale = s.t_design(i, j) / s.alpha[j];
      const Real p = sol.prices(i, j);
      const Real t = sol.times(i, j);
      const Real gamma = sol.gamma(i, j);
      const Real nu = sol.nu(i, j);

      // Gradient of the Lagrangian in p: f'(p) + (beta + nu) * scale / p
      // - gamma with f'(p) = scale * (ln(cap/p) - 1).
      const Real grad = scale * (std::log(cap / p) - 1.0) +
                        (sol.beta[j] + nu) * scale / p - gamma;
      track(std::abs(grad));

      track(std::max(0.0, p - cap));                      // C5
      track(std::max(0.0, t - (a(i, j) ? s.batch_duration[j] : 0.0)));  // C6~
      track(std::max(0.0, -gamma));
      track(std::max(0.0, -nu));
      track(std::abs(gamma * (p - cap)));
      track(std::abs(nu * (t - (a(i, j) ? s.batch_duration[j] : 0.0))));
    }
  }
  return worst;
}

std::uint64_t primal_solve_count() {
  return g_solve_count.load(std::memory_order_relaxed);
}

}  // namespace adtime
