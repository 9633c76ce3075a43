#include "adtime/master.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <queue>
#include <span>
#include <stdexcept>

#include "adtime/errors.hpp"

namespace adtime {

namespace {

constexpr Real kInf = std::numeric_limits<Real>::infinity();
constexpr std::int64_t kLexSearchNodeCap = 2'000'000;

struct VarRef {
  int i;
  int j;
};

/// Canonical cut evaluation (constant + row-major coefficient sum). Both
/// search phases score leaves through this so their values compare bitwise.
Real cut_value_at(const BendersCut& cut, const AssignmentMatrix& a) {
  Real v = cut.constant;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j)) v += cut.coeff(i, j);
  return v;
}

Real min_cut_value(const std::vector<BendersCut>& cuts,
                   const AssignmentMatrix& a) {
  Real v = kInf;
  for (const auto& cut : cuts) v = std::min(v, cut_value_at(cut, a));
  return v;
}

/// Branch-and-bound core over a fixed variable order. A node is the prefix
/// of choices for order[0..depth); everything past the prefix is free.
class Searcher {
 public:
  Searcher(const Scenario& s, const std::vector<BendersCut>& cuts,
           std::vector<VarRef> order)
      : s_(s), cuts_(cuts), order_(std::move(order)) {
    const int n = s.n_followers;
    sorted_.resize(cuts_.size());
    for (std::size_t l = 0; l < cuts_.size(); ++l) {
      sorted_[l].assign(n, {});
      for (std::size_t pos = 0; pos < order_.size(); ++pos) {
        const auto [i, j] = order_[pos];
        sorted_[l][i].push_back({cuts_[l].coeff(i, j), static_cast<int>(pos)});
      }
      for (auto& row : sorted_[l])
        std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) {
          if (a.first != b.first) return a.first > b.first;
          return a.second < b.second;
        });
    }
  }

  std::size_t num_vars() const { return order_.size(); }
  const std::vector<VarRef>& order() const { return order_; }

  /// Admissible upper bound on min-cut over completions of the prefix: each
  /// cut finishes independently with its largest positive free coefficients
  /// within the remaining row budgets. Early-exits once the running minimum
  /// cannot beat `cutoff` (the caller prunes then anyway).
  Real bound(std::span<const std::uint8_t> choices, Real cutoff) const {
    const int depth = static_cast<int>(choices.size());
    used_.assign(s_.n_followers, 0);
    for (int k = 0; k < depth; ++k)
      if (choices[k]) ++used_[order_[k].i];

    Real best = kInf;
    for (std::size_t l = 0; l < cuts_.size(); ++l) {
      Real v = cuts_[l].constant;
      for (int k = 0; k < depth; ++k)
        if (choices[k]) v += cuts_[l].coeff(order_[k].i, order_[k].j);
      for (int i = 0; i < s_.n_followers; ++i) {
        int left = s_.block_budget[i] - used_[i];
        if (left <= 0) continue;
        for (const auto& [coeff, pos] : sorted_[l][i]) {
          if (coeff <= 0.0) break;
          if (pos < depth) continue;
          v += coeff;
          if (--left == 0) break;
        }
      }
      best = std::min(best, v);
      if (best <= cutoff) return best;
    }
    return best;
  }

  AssignmentMatrix materialize(std::span<const std::uint8_t> choices) const {
    AssignmentMatrix a(s_.n_followers, s_.m_blocks, 0);
    for (std::size_t k = 0; k < choices.size(); ++k)
      if (choices[k]) a(order_[k].i, order_[k].j) = 1;
    return a;
  }

  /// The assignment one single cut would pick on its own (per-row greedy).
  AssignmentMatrix greedy_for_cut(std::size_t l) const {
    AssignmentMatrix a(s_.n_followers, s_.m_blocks, 0);
    for (int i = 0; i < s_.n_followers; ++i) {
      int left = s_.block_budget[i];
      for (const auto& [coeff, pos] : sorted_[l][i]) {
        if (left <= 0 || coeff <= 0.0) break;
        a(order_[pos].i, order_[pos].j) = 1;
        --left;
      }
    }
    return a;
  }

 private:
  const Scenario& s_;
  const std::vector<BendersCut>& cuts_;
  std::vector<VarRef> order_;
  // per cut, per follower: (coeff, order position) sorted by coeff desc
  std::vector<std::vector<std::vector<std::pair<Real, int>>>> sorted_;
  mutable std::vector<int> used_;
};

struct PqNode {
  Real bound;
  std::uint64_t seq;
  std::vector<std::uint8_t> choices;
};

struct PqOrder {
  bool operator()(const PqNode& a, const PqNode& b) const {
    if (a.bound != b.bound) return a.bound < b.bound;
    return a.seq > b.seq;  // FIFO among equal bounds
  }
};

}  // namespace

Real cut_upper_bound(const Scenario& s, const std::vector<BendersCut>& cuts,
                     const PartialAssignment& partial) {
  validate(s);
  if (cuts.empty())
    throw std::invalid_argument("cut_upper_bound: need at least one cut");
  if (partial.rows() != static_cast<std::size_t>(s.n_followers) ||
      partial.cols() != static_cast<std::size_t>(s.m_blocks))
    throw validation_error("partial assignment: shape mismatch");

  Real best = kInf;
  for (const auto& cut : cuts) {
    if (cut.coeff.rows() != partial.rows() ||
        cut.coeff.cols() != partial.cols())
      throw validation_error("cut: shape mismatch");
    Real v = cut.constant;
    for (int i = 0; i < s.n_followers; ++i) {
      int left = s.block_budget[i];
      std::vector<Real> free_coeffs;
      for (int j = 0; j < s.m_blocks; ++j) {
        const auto fixed = partial(i, j);
        if (fixed == 1) {
          if (s.lambda(i, j) <= 0.0)
            throw validation_error("partial assignment: fixes a lambda == 0 pair");
          v += cut.coeff(i, j);
          --left;
        } else if (fixed == kFree && s.lambda(i, j) > 0.0) {
          free_coeffs.push_back(cut.coeff(i, j));
        }
      }
      if (left < 0)
        throw validation_error("partial assignment: row over budget");
      std::sort(free_coeffs.rbegin(), free_coeffs.rend());
      for (Real c : free_coeffs) {
        if (left <= 0 || c <= 0.0) break;
        v += c;
        --left;
      }
    }
    best = std::min(best, v);
  }
  return best;
}

MasterSolution solve_master(const Scenario& s,
                            const std::vector<BendersCut>& cuts,
                            const std::set<AssignmentMatrix>& excluded) {
  validate(s);
  if (cuts.empty())
    throw std::invalid_argument("solve_master: need at least one cut");
  for (const auto& cut : cuts)
    if (cut.coeff.rows() != static_cast<std::size_t>(s.n_followers) ||
        cut.coeff.cols() != static_cast<std::size_t>(s.m_blocks))
      throw validation_error("cut: shape mismatch");

  std::vector<VarRef> vars;
  for (int i = 0; i < s.n_followers; ++i)
    for (int j = 0; j < s.m_blocks; ++j)
      if (s.lambda(i, j) > 0.0) vars.push_back({i, j});

  // Branch on the variable the cuts disagree about most.
  std::vector<VarRef> branch_order = vars;
  std::stable_sort(branch_order.begin(), branch_order.end(),
                   [&](const VarRef& a, const VarRef& b) {
                     auto spread = [&](const VarRef& v) {
                       Real lo = kInf, hi = -kInf;
                       for (const auto& cut : cuts) {
                         lo = std::min(lo, cut.coeff(v.i, v.j));
                         hi = std::max(hi, cut.coeff(v.i, v.j));
                       }
                       return hi - lo;
                     };
                     return spread(a) > spread(b);
                   });

  Searcher searcher(s, cuts, branch_order);
  MasterSolution out;

  bool found = false;
  Real best_value = -kInf;
  AssignmentMatrix best_leaf;
  auto offer = [&](const AssignmentMatrix& a) {
    if (excluded.contains(a)) return;
    const Real v = min_cut_value(cuts, a);
    if (!found || v > best_value) {
      found = true;
      best_value = v;
      best_leaf = a;
    }
  };

  // Seed the incumbent so pruning starts immediately: the empty assignment
  // plus each cut's own greedy optimum.
  offer(AssignmentMatrix(s.n_followers, s.m_blocks, 0));
  for (std::size_t l = 0; l < cuts.size(); ++l)
    offer(searcher.greedy_for_cut(l));

  std::priority_queue<PqNode, std::vector<PqNode>, PqOrder> queue;
  std::uint64_t seq = 0;
  queue.push({searcher.bound({}, -kInf), seq++, {}});
  while (!queue.empty()) {
    PqNode node = queue.top();
    queue.pop();
    ++out.nodes_explored;
    if (found && node.bound <= best_value) continue;
    if (node.choices.size() == searcher.num_vars()) {
      offer(searcher.materialize(node.choices));
      continue;
    }
    const auto [vi, vj] = searcher.order()[node.choices.size()];
    int used = 0;
    for (std::size_t k = 0; k < node.choices.size(); ++k)
      if (node.choices[k] && searcher.order()[k].i == vi) ++used;
    for (std::uint8_t choice : {std::uint8_t{1}, std::uint8_t{0}}) {
      if (choice == 1 && used >= s.block_budget[vi]) continue;
      auto child = node.choices;
      child.push_back(choice);
      const Real b = searcher.bound(child, found ? best_value : -kInf);
      if (found && b <= best_value) continue;
      queue.push({b, seq++, std::move(child)});
    }
  }
  if (!found)
    throw lattice_exhausted_error(
        "solve_master: every feasible assignment is excluded");

  out.delta = best_value;
  out.assignment = best_leaf;

  // Tie-break pass: depth-first in flat row-major order, zero branch first,
  // pruning strictly below the optimum. The first leaf reaching the optimum
  // is the lexicographically smallest one. Falls back to the incumbent if
  // the plateau is too wide to walk.
  Searcher lex(s, cuts, vars);
  std::vector<std::uint8_t> choices;
  std::vector<int> used_rows(s.n_followers, 0);
  std::int64_t lex_nodes = 0;
  bool overflow = false;
  std::optional<AssignmentMatrix> lex_result;
  auto dfs = [&](auto&& self, std::size_t depth) -> bool {
    if (overflow) return false;
    if (++lex_nodes > kLexSearchNodeCap) {
      overflow = true;
      return false;
    }
    if (depth == lex.num_vars()) {
      AssignmentMatrix a = lex.materialize(choices);
      if (excluded.contains(a)) return false;
      if (min_cut_value(cuts, a) >= best_value) {
        lex_result = std::move(a);
        return true;
      }
      return false;
    }
    const auto [vi, vj] = lex.order()[depth];
    for (std::uint8_t choice : {std::uint8_t{0}, std::uint8_t{1}}) {
      if (choice == 1 && used_rows[vi] >= s.block_budget[vi]) continue;
      choices.push_back(choice);
      used_rows[vi] += choice;
      const bool keep = lex.bound(choices, -kInf) >= best_value &&
                        self(self, depth + 1);
      used_rows[vi] -= choice;
      choices.pop_back();
      if (keep) return true;
    }
    return false;
  };
  dfs(dfs, 0);
  out.nodes_explored += lex_nodes;
  if (lex_result) out.assignment = *std::move(lex_result);
  return out;
}

}  // namespace adtime
