#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "scalar.hpp"

namespace disperse {

// Positions in grid units, indexed like ProblemInstance::initial.
using Configuration = std::vector<Int128>;

struct ProblemInstance {
  Int128 delta = 0;               // required separation, grid units, > 0
  std::vector<Int128> initial;    // sorted non-decreasing
  std::vector<std::size_t> perm;  // sorted index -> original input index
  int frac_digits = 0;            // grid resolution 10^-frac_digits

  std::size_t size() const { return initial.size(); }
};

// Parses decimal literals, unifies them on the finest scale seen, sorts
// stably (equal values keep input order) and records the permutation.
// Throws ParseError on malformed input or delta <= 0, OverflowError when
// the unified scale does not fit.
ProblemInstance normalize_instance(std::span<const std::string> raw_positions, std::string_view delta_text);

// Same, starting from grid units (generator and test path).
ProblemInstance make_instance(Int128 delta_units, std::vector<Int128> position_units, int frac_digits);

// Sum of |cfg[i] - initial[i]|, exact.
Int128 total_cost(const ProblemInstance& inst, const Configuration& cfg);

// Instance text form: delta first, then one position per line in original
// input order; '#' lines are comments.
std::string instance_to_text(const ProblemInstance& inst);

}  // namespace disperse
