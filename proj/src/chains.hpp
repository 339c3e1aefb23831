#pragma once

#include <cstddef>
#include <vector>

#include "instance.hpp"

namespace disperse {

// One maximal chain of an independent configuration: a run of points whose
// consecutive gaps are exactly delta, with members classified against their
// input positions.
struct ChainView {
  std::size_t first = 0;
  std::size_t last = 0;               // inclusive
  std::size_t left_count = 0;         // now left of the input spot
  std::size_t stationary_count = 0;   // exactly on the input spot
  std::size_t right_count = 0;        // now right of the input spot

  std::size_t length() const { return last - first + 1; }
};

// Splits an independent configuration into maximal chains, left to right,
// covering every index once. Throws std::invalid_argument when some gap is
// below delta.
std::vector<ChainView> decompose_chains(const ProblemInstance& inst, const Configuration& cfg);

// Exact yes/no checks on a configuration. Nothing here uses tolerances.
struct AuditReport {
  bool independent = false;      // every gap >= delta
  bool order_preserved = false;  // sorted input order survives in the output
  std::vector<ChainView> chains;
  // per chain: moving the whole chain left strictly raises the cost
  // (strictly more members at-or-left of their spot than right of it)
  std::vector<bool> left_move_worsens;
  // per chain: moving the whole chain right never lowers the cost
  std::vector<bool> right_move_no_gain;
  // the strict left bound also holds on every prefix of every chain
  bool prefix_left_move_worsens = false;
  bool stationary_per_chain = false;  // every chain keeps at least one fixed point

  bool all_ok() const;
};

// Never throws for bad configurations: a non-independent cfg comes back with
// independent=false and the chain checks skipped.
AuditReport audit(const ProblemInstance& inst, const Configuration& cfg);

}  // namespace disperse
