#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "instance.hpp"
#include "meld_heap.hpp"

namespace disperse {

// A live chain during the sweep. Positions are not stored per point:
// point i sits at base + i * delta, so moving the whole chain left is a
// single base update. A point appended to the right of its input spot
// contributes the key i * delta - initial[i] to right_heap; its current
// rightward slack is key + base, and the key never changes afterwards.
// Two adjacent chains sit exactly delta apart iff their bases are equal,
// which is what makes melding the heaps on a merge offset-free.
struct Chain {
  std::size_t first = 0;
  std::size_t last = 0;
  Int128 base = 0;
  std::size_t left_count = 0;        // members now left of their input spot
  std::size_t stationary_count = 0;  // members exactly on their input spot
  MeldHeap right_heap;               // one key per right-displaced member
  Int128 total_left_shift = 0;       // cumulative leftward movement since creation

  std::size_t right_count() const { return right_heap.size(); }
  std::size_t length() const { return last - first + 1; }
};

// Moves the chain left by `amount`: former stationary members become
// left-displaced, then every right member whose slack hits zero is popped
// into the stationary count. `amount` must be positive and no larger than
// the smallest right slack. Exposed for tests.
void shift_chain(Chain& c, Int128 amount);

// Joins two adjacent chains with equal bases. The merged chain keeps the
// left chain's shift bookkeeping.
Chain merge_chains(Chain&& left, Chain&& right);

struct SolveCounters {
  std::uint64_t heap_ops = 0;  // key comparisons inside heap operations
  std::uint64_t shifts = 0;
  std::uint64_t merges = 0;
  std::uint64_t iterations = 0;
};

enum class TraceKind { PlaceInitial, PlaceAppended, NewChain, JoinChain, Shift, Merge };

struct TraceEvent {
  std::size_t iter = 0;
  TraceKind kind = TraceKind::PlaceInitial;
  std::size_t chain_start = 0;
  Int128 amount = 0;                  // Shift only
  std::size_t merged_with_start = 0;  // Merge only: start of the absorbed right chain
};

struct SolveOptions {
  bool want_trace = false;
  bool debug_audit = false;  // re-audit the placed prefix after every iteration
};

struct SolveResult {
  Configuration configuration;
  Int128 total_cost = 0;  // recomputed from the configuration, not accumulated
  SolveCounters counters;
  std::vector<TraceEvent> trace;
};

// One point per iteration: place it (phase 1), and when the chain tips to
// as many right-displaced members as the rest, pull the chain left until a
// member lands on its input spot or the chain collides with its left
// neighbour and merges (phase 2). Stepping is exposed so tests can watch
// intermediate states.
class SolverState {
 public:
  explicit SolverState(const ProblemInstance& inst, SolveOptions opts = {});

  std::size_t placed() const { return next_; }
  bool done() const { return next_ == inst_->size(); }

  // Phase 1 for the next point; true when phase 2 is required.
  bool place_next();
  // Phase 2 for the last chain.
  void rebalance_last();
  // One full iteration, with the debug audit when enabled.
  void step();

  const std::vector<Chain>& chains() const { return chains_; }
  Configuration positions() const;  // of the placed prefix
  const SolveCounters& counters() const { return counters_; }
  std::vector<TraceEvent> take_trace() { return std::move(trace_); }

 private:
  void start_chain(std::size_t i);
  Int128 position_of(const Chain& c, std::size_t i) const;
  void record(TraceKind kind, std::size_t chain_start, Int128 amount = 0, std::size_t merged_with = 0);
  void check_invariants() const;

  const ProblemInstance* inst_;
  SolveOptions opts_;
  std::vector<Chain> chains_;
  std::vector<TraceEvent> trace_;
  SolveCounters counters_;
  std::size_t next_ = 0;
};

SolveResult solve(const ProblemInstance& inst, const SolveOptions& opts = {});

}  // namespace disperse
