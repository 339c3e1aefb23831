#include "generate.hpp"

#include <stdexcept>

namespace disperse {

std::uint64_t child_seed(std::uint64_t seed, std::uint64_t index) {
  SplitMix64 rng(seed + index * 0x9E3779B97F4A7C15ULL);
  return rng.next();
}

const char* family_name(Family family) {
  switch (family) {
    case Family::Uniform: return "uniform";
    case Family::Clustered: return "clustered";
    case Family::AdversarialSingleChain: return "adversarial_single_chain";
    case Family::NearIndependent: return "near_independent";
  }
  throw std::logic_error("family_name: unknown family");
}

Family family_from_name(std::string_view name) {
  if (name == "uniform") return Family::Uniform;
  if (name == "clustered") return Family::Clustered;
  if (name == "adversarial_single_chain") return Family::AdversarialSingleChain;
  if (name == "near_independent") return Family::NearIndependent;
  throw std::invalid_argument("unknown instance family '" + std::string(name) + "'");
}

namespace {

// Generation draws 64-bit values, so the grid magnitudes must fit.
std::uint64_t units_for_draws(Int128 value, const char* what) {
  if (value <= 0) throw std::invalid_argument(std::string(what) + " must be positive");
  if (value > Int128{1'000'000'000'000'000'000LL})
    throw std::invalid_argument(std::string(what) + " exceeds 10^18 grid units");
  return static_cast<std::uint64_t>(value);
}

}  // namespace

ProblemInstance gen_instance(const GenSpec& spec) {
  const Decimal range_dec = parse_decimal(spec.coord_range);
  const Decimal delta_dec = parse_decimal(spec.delta);
  const int frac = std::max(range_dec.frac_digits, delta_dec.frac_digits);
  const std::uint64_t range = units_for_draws(rescale(range_dec, frac), "coord range");
  const std::uint64_t delta = units_for_draws(rescale(delta_dec, frac), "separation");

  SplitMix64 rng(spec.seed);
  std::vector<Int128> units;
  units.reserve(spec.n);

  switch (spec.family) {
    case Family::Uniform: {
      for (std::size_t i = 0; i < spec.n; ++i) units.push_back(Int128{static_cast<long long>(rng.below(range + 1))});
      break;
    }
    case Family::Clustered: {
      const std::size_t centres = spec.n / 8 + 1;
      std::vector<std::uint64_t> centre(centres);
      for (std::uint64_t& c : centre) c = rng.below(range + 1);
      const std::uint64_t spread = delta - 1;  // members stay within less than delta of the centre
      for (std::size_t i = 0; i < spec.n; ++i) {
        const std::uint64_t c = centre[rng.below(centres)];
        Int128 offset = 0;
        if (spread > 0) offset = static_cast<Int128>(rng.below(2 * spread + 1)) - static_cast<Int128>(spread);
        units.push_back(checked_add(Int128{static_cast<long long>(c)}, offset));
      }
      break;
    }
    case Family::AdversarialSingleChain: {
      Int128 cursor = Int128{static_cast<long long>(rng.below(range + 1))};
      for (std::size_t i = 0; i < spec.n; ++i) {
        if (i > 0) {
          const std::uint64_t gap = delta >= 2 ? 1 + rng.below(delta - 1) : 0;
          cursor = checked_add(cursor, Int128{static_cast<long long>(gap)});
        }
        units.push_back(cursor);
      }
      break;
    }
    case Family::NearIndependent: {
      Int128 cursor = Int128{static_cast<long long>(rng.below(range + 1))};
      for (std::size_t i = 0; i < spec.n; ++i) {
        if (i > 0) {
          std::uint64_t gap;
          if (rng.below(8) == 0) {
            gap = rng.below(delta);  // short gap, forces chaining
          } else {
            gap = delta + rng.below(delta + 1);
          }
          cursor = checked_add(cursor, Int128{static_cast<long long>(gap)});
        }
        units.push_back(cursor);
      }
      break;
    }
  }

  return make_instance(static_cast<Int128>(delta), std::move(units), frac);
}

}  // namespace disperse
