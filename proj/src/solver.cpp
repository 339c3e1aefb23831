#include "solver.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "chains.hpp"

namespace disperse {

namespace {

// Base/count part of a left shift; popping newly stationary members is
// separate so a merge can happen in between.
void apply_left_shift(Chain& c, Int128 amount) {
  c.base = checked_sub(c.base, amount);
  c.total_left_shift = checked_add(c.total_left_shift, amount);
  c.left_count += c.stationary_count;
  c.stationary_count = 0;
}

void collect_stationary(Chain& c) {
  while (!c.right_heap.empty() && checked_add(c.right_heap.find_min(), c.base) == 0) {
    c.right_heap.extract_min();
    ++c.stationary_count;
  }
}

}  // namespace

void shift_chain(Chain& c, Int128 amount) {
  if (amount <= 0) throw std::logic_error("shift_chain: amount must be positive");
  if (!c.right_heap.empty() && checked_add(c.right_heap.find_min(), c.base) < amount)
    throw std::logic_error("shift_chain: amount exceeds the smallest right slack");
  apply_left_shift(c, amount);
  collect_stationary(c);
}

Chain merge_chains(Chain&& left, Chain&& right) {
  if (right.first != left.last + 1) throw std::logic_error("merge_chains: chains are not adjacent");
  if (right.base != left.base) throw std::logic_error("merge_chains: bases differ");
  Chain merged = std::move(left);
  merged.last = right.last;
  merged.left_count += right.left_count;
  merged.stationary_count += right.stationary_count;
  merged.right_heap.meld(right.right_heap);
  // total_left_shift stays the left chain's value
  return merged;
}

SolverState::SolverState(const ProblemInstance& inst, SolveOptions opts) : inst_(&inst), opts_(opts) {
  if (inst.delta <= 0) throw std::invalid_argument("solve: instance separation must be positive");
}

Int128 SolverState::position_of(const Chain& c, std::size_t i) const {
  return checked_add(c.base, checked_mul(static_cast<Int128>(i), inst_->delta));
}

void SolverState::record(TraceKind kind, std::size_t chain_start, Int128 amount, std::size_t merged_with) {
  if (!opts_.want_trace) return;
  trace_.push_back(TraceEvent{next_ - 1, kind, chain_start, amount, merged_with});
}

void SolverState::start_chain(std::size_t i) {
  Chain c;
  c.first = c.last = i;
  c.base = checked_sub(inst_->initial[i], checked_mul(static_cast<Int128>(i), inst_->delta));
  c.stationary_count = 1;
  c.right_heap = MeldHeap(&counters_.heap_ops);
  chains_.push_back(std::move(c));
}

bool SolverState::place_next() {
  if (done()) throw std::logic_error("place_next: all points placed");
  const std::size_t i = next_++;
  ++counters_.iterations;

  if (chains_.empty()) {
    start_chain(i);
    record(TraceKind::PlaceInitial, i);
    record(TraceKind::NewChain, i);
    return false;
  }

  Chain& tail = chains_.back();
  const Int128 gap = checked_sub(inst_->initial[i], position_of(tail, tail.last));

  if (gap > inst_->delta) {
    start_chain(i);
    record(TraceKind::PlaceInitial, i);
    record(TraceKind::NewChain, i);
    return false;
  }
  if (gap == inst_->delta) {
    // lands exactly delta after the tail, i.e. on its own input spot
    tail.last = i;
    ++tail.stationary_count;
    record(TraceKind::PlaceInitial, tail.first);
    record(TraceKind::JoinChain, tail.first);
    return false;
  }

  // too close (or even left of the tail): append at tail position + delta
  tail.last = i;
  tail.right_heap.insert(checked_sub(checked_mul(static_cast<Int128>(i), inst_->delta), inst_->initial[i]));
  record(TraceKind::PlaceAppended, tail.first);
  record(TraceKind::JoinChain, tail.first);
  return tail.right_heap.size() == tail.left_count + tail.stationary_count;
}

void SolverState::rebalance_last() {
  Chain& tail = chains_.back();
  if (tail.right_heap.empty() || tail.right_heap.size() != tail.left_count + tail.stationary_count)
    throw std::logic_error("rebalance_last: chain is not at the tipping count");

  const Int128 min_slack = checked_add(tail.right_heap.find_min(), tail.base);
  const bool has_left_neighbour = chains_.size() >= 2;
  Int128 room = 0;  // how far the chain can move before touching its neighbour
  if (has_left_neighbour) room = checked_sub(tail.base, chains_[chains_.size() - 2].base);

  if (!has_left_neighbour || min_slack < room) {
    apply_left_shift(tail, min_slack);
    ++counters_.shifts;
    record(TraceKind::Shift, tail.first, min_slack);
    collect_stationary(tail);
    return;
  }

  // room <= min_slack: close the gap and merge; any member that lands on
  // its input spot is collected from the merged heap afterwards
  apply_left_shift(tail, room);
  ++counters_.shifts;
  record(TraceKind::Shift, tail.first, room);

  Chain right = std::move(chains_.back());
  chains_.pop_back();
  const std::size_t right_first = right.first;
  Chain& left = chains_.back();
  left = merge_chains(std::move(left), std::move(right));
  ++counters_.merges;
  record(TraceKind::Merge, left.first, 0, right_first);
  collect_stationary(left);
}

void SolverState::step() {
  if (place_next()) rebalance_last();
  if (opts_.debug_audit) check_invariants();
}

Configuration SolverState::positions() const {
  Configuration cfg(next_);
  for (const Chain& c : chains_) {
    for (std::size_t i = c.first; i <= c.last; ++i) cfg[i] = position_of(c, i);
  }
  return cfg;
}

void SolverState::check_invariants() const {
  auto fail = [](const std::string& what) { throw std::logic_error("solver invariant breach: " + what); };

  std::size_t expect = 0;
  const Chain* prev = nullptr;
  for (const Chain& c : chains_) {
    if (c.first != expect || c.last < c.first) fail("chains do not tile the prefix");
    expect = c.last + 1;
    if (c.left_count + c.stationary_count + c.right_count() != c.length()) fail("member counts out of sync");
    if (c.left_count + c.stationary_count <= c.right_count()) fail("right members not a strict minority");
    if (c.left_count > c.stationary_count + c.right_count()) fail("left members in the majority");
    if (!c.right_heap.empty() && checked_add(c.right_heap.find_min(), c.base) <= 0)
      fail("right heap holds a non-right member");
    if (prev && prev->base >= c.base) fail("bases not strictly increasing");
    prev = &c;
  }
  if (expect != next_) fail("chains do not cover all placed points");

  ProblemInstance prefix;
  prefix.delta = inst_->delta;
  prefix.frac_digits = inst_->frac_digits;
  prefix.initial.assign(inst_->initial.begin(), inst_->initial.begin() + static_cast<std::ptrdiff_t>(next_));
  if (!audit(prefix, positions()).all_ok()) fail("prefix audit failed");
}

SolveResult solve(const ProblemInstance& inst, const SolveOptions& opts) {
  SolverState state(inst, opts);
  while (!state.done()) state.step();

  SolveResult result;
  result.configuration = state.positions();
  result.total_cost = total_cost(inst, result.configuration);
  result.counters = state.counters();
  result.trace = state.take_trace();
  return result;
}

}  // namespace disperse
