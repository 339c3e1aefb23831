#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>
#include <stdexcept>
#include <utility>

namespace disperse {

namespace {

std::vector<Int128> transformed_values(const ProblemInstance& inst) {
  std::vector<Int128> z(inst.size());
  for (std::size_t i = 0; i < inst.size(); ++i) {
    z[i] = checked_sub(inst.initial[i], checked_mul(static_cast<Int128>(i), inst.delta));
  }
  return z;
}

Configuration positions_from_fits(const ProblemInstance& inst, const std::vector<Int128>& fits) {
  Configuration cfg(inst.size());
  for (std::size_t i = 0; i < inst.size(); ++i) {
    cfg[i] = checked_add(fits[i], checked_mul(static_cast<Int128>(i), inst.delta));
  }
  return cfg;
}

// A pooled block during the monotone fit. The lower half (including the
// lower median on top) lives in a max-heap, the upper half in a min-heap.
struct Block {
  std::size_t first = 0;
  std::priority_queue<Int128> low;
  std::priority_queue<Int128, std::vector<Int128>, std::greater<Int128>> high;

  std::size_t size() const { return low.size() + high.size(); }
  Int128 median() const { return low.top(); }

  // Pools `right` into this block (this block sits to its left). The
  // smaller side is drained element-wise, then the halves are repaired
  // and rebalanced; total work stays near-linearithmic because elements
  // only move when they sit in the smaller block.
  void absorb(Block&& right) {
    if (right.size() > size()) {
      std::swap(low, right.low);
      std::swap(high, right.high);
    }
    while (!right.low.empty()) {
      low.push(right.low.top());
      right.low.pop();
    }
    while (!right.high.empty()) {
      high.push(right.high.top());
      right.high.pop();
    }
    while (!low.empty() && !high.empty() && low.top() > high.top()) {
      Int128 a = low.top();
      Int128 b = high.top();
      low.pop();
      high.pop();
      low.push(b);
      high.push(a);
    }
    const std::size_t target_low = (size() + 1) / 2;
    while (low.size() > target_low) {
      high.push(low.top());
      low.pop();
    }
    while (low.size() < target_low) {
      low.push(high.top());
      high.pop();
    }
  }
};

}  // namespace

OracleResult pav_isotonic_solve(const ProblemInstance& inst) {
  const std::vector<Int128> z = transformed_values(inst);

  std::vector<Block> blocks;
  for (std::size_t i = 0; i < z.size(); ++i) {
    Block b;
    b.first = i;
    b.low.push(z[i]);
    while (!blocks.empty() && blocks.back().median() > b.median()) {
      std::size_t first = blocks.back().first;
      blocks.back().absorb(std::move(b));
      b = std::move(blocks.back());
      b.first = first;
      blocks.pop_back();
    }
    blocks.push_back(std::move(b));
  }

  std::vector<Int128> fits(z.size());
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    const std::size_t end = k + 1 < blocks.size() ? blocks[k + 1].first : z.size();
    for (std::size_t i = blocks[k].first; i < end; ++i) fits[i] = blocks[k].median();
  }

  OracleResult result;
  result.witness = positions_from_fits(inst, fits);
  for (std::size_t i = 0; i < z.size(); ++i) {
    result.best_cost = checked_add(result.best_cost, checked_abs(checked_sub(z[i], fits[i])));
  }
  return result;
}

OracleResult exhaustive_anchored_solve(const ProblemInstance& inst) {
  const std::size_t n = inst.size();
  if (n > 14) throw std::invalid_argument("exhaustive_anchored_solve: limited to n <= 14");

  OracleResult result;
  if (n == 0) {
    result.all_optima.push_back(Configuration{});
    return result;
  }

  const std::vector<Int128> z = transformed_values(inst);
  bool found = false;
  Int128 best = 0;
  std::vector<Configuration> optima;
  std::vector<Int128> fits(n);

  // segment by segment: pick [start, end] and an anchor whose z value the
  // whole segment adopts; independence across segments is exactly
  // "adopted values non-decreasing"
  std::function<void(std::size_t, Int128, Int128)> extend = [&](std::size_t start, Int128 floor_value,
                                                                Int128 cost_so_far) {
    if (start == n) {
      if (!found || cost_so_far < best) {
        found = true;
        best = cost_so_far;
        optima.clear();
      }
      if (cost_so_far == best) optima.push_back(positions_from_fits(inst, fits));
      return;
    }
    for (std::size_t end = start; end < n; ++end) {
      for (std::size_t anchor = start; anchor <= end; ++anchor) {
        const Int128 value = z[anchor];
        if (start > 0 && value < floor_value) continue;
        Int128 cost = cost_so_far;
        for (std::size_t i = start; i <= end; ++i) cost = checked_add(cost, checked_abs(checked_sub(z[i], value)));
        if (found && cost > best) continue;
        for (std::size_t i = start; i <= end; ++i) fits[i] = value;
        extend(end + 1, value, cost);
      }
    }
  };
  extend(0, 0, 0);

  std::sort(optima.begin(), optima.end());
  optima.erase(std::unique(optima.begin(), optima.end()), optima.end());

  result.best_cost = best;
  result.witness = optima.front();
  result.all_optima = std::move(optima);
  return result;
}

OracleResult naive_quadratic_solve(const ProblemInstance& inst) {
  const std::size_t n = inst.size();
  if (inst.delta <= 0) throw std::invalid_argument("naive_quadratic_solve: separation must be positive");

  Configuration pos;
  pos.reserve(n);
  std::vector<std::pair<std::size_t, std::size_t>> chains;  // inclusive index ranges

  for (std::size_t i = 0; i < n; ++i) {
    const Int128 spot = inst.initial[i];
    if (i == 0 || checked_sub(spot, pos[i - 1]) > inst.delta) {
      pos.push_back(spot);
      chains.emplace_back(i, i);
      continue;
    }
    if (checked_sub(spot, pos[i - 1]) == inst.delta) {
      pos.push_back(spot);
      chains.back().second = i;
      continue;
    }

    pos.push_back(checked_add(pos[i - 1], inst.delta));
    chains.back().second = i;

    auto [first, last] = chains.back();
    std::size_t left = 0, stationary = 0, right = 0;
    for (std::size_t j = first; j <= last; ++j) {
      if (pos[j] < inst.initial[j]) ++left;
      else if (pos[j] == inst.initial[j]) ++stationary;
      else ++right;
    }
    if (right != left + stationary) continue;

    Int128 min_slack = 0;
    bool seen = false;
    for (std::size_t j = first; j <= last; ++j) {
      if (pos[j] <= inst.initial[j]) continue;
      const Int128 slack = checked_sub(pos[j], inst.initial[j]);
      if (!seen || slack < min_slack) min_slack = slack;
      seen = true;
    }

    const bool has_left_neighbour = chains.size() >= 2;
    Int128 room = 0;
    if (has_left_neighbour) room = checked_sub(checked_sub(pos[first], pos[first - 1]), inst.delta);

    const Int128 amount = (!has_left_neighbour || min_slack < room) ? min_slack : room;
    for (std::size_t j = first; j <= last; ++j) pos[j] = checked_sub(pos[j], amount);
    if (has_left_neighbour && min_slack >= room) {
      const std::size_t merged_last = chains.back().second;
      chains.pop_back();
      chains.back().second = merged_last;
    }
  }

  OracleResult result;
  result.best_cost = total_cost(inst, pos);
  result.witness = std::move(pos);
  return result;
}

}  // namespace disperse
