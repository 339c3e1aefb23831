#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "instance.hpp"

namespace disperse {

// Fixed generator so instances reproduce bit-exactly across platforms.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // bound > 0; modulo reduction, documented as part of the fixed scheme
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }
};

// Output of the master stream at `index`; used to split one seed into
// independent per-item seeds.
std::uint64_t child_seed(std::uint64_t seed, std::uint64_t index);

enum class Family { Uniform, Clustered, AdversarialSingleChain, NearIndependent };

const char* family_name(Family family);
Family family_from_name(std::string_view name);  // throws std::invalid_argument

// Everything needed to regenerate an instance bit-exactly. range and delta
// are decimal strings so the spec survives serialization unchanged.
struct GenSpec {
  std::uint64_t seed = 0;
  std::size_t n = 0;
  std::string coord_range = "1000";
  std::string delta = "1";
  Family family = Family::Uniform;
};

// uniform: i.i.d. draws in [0, range].
// clustered: a few centres in [0, range], members within less than delta.
// adversarial_single_chain: increasing positions, every gap below delta.
// near_independent: mostly gaps in [delta, 2*delta], occasional short gap.
ProblemInstance gen_instance(const GenSpec& spec);

}  // namespace disperse
