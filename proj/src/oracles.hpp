#pragma once

#include <vector>

#include "instance.hpp"

namespace disperse {

struct OracleResult {
  Int128 best_cost = 0;
  Configuration witness;
  // exhaustive oracle only: every distinct optimal configuration in which
  // each chain keeps an anchor point on its input spot
  std::vector<Configuration> all_optima;
};

// Isotonic-regression route: with z_i = initial_i - i*delta the gap
// constraint becomes "z non-decreasing", and the best monotone fit under
// the absolute loss comes from pool-adjacent-violators with block medians
// (lower median, canonically). Positions are fit_i + i*delta. Costs are
// comparable with the solver; witnesses need not coincide.
OracleResult pav_isotonic_solve(const ProblemInstance& inst);

// Brute force for n <= 14: every split into consecutive segments, every
// in-segment anchor per segment; keeps the configurations that stay
// independent globally and returns the cheapest, plus all distinct optima.
OracleResult exhaustive_anchored_solve(const ProblemInstance& inst);

// The same sweep as the solver but with explicit per-point positions,
// linear scans and no heaps; quadratic, and coordinate-identical to
// solve() by construction.
OracleResult naive_quadratic_solve(const ProblemInstance& inst);

}  // namespace disperse
