#include "instance.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace disperse {

ProblemInstance make_instance(Int128 delta_units, std::vector<Int128> position_units, int frac_digits) {
  if (delta_units <= 0) throw ParseError("separation must be positive");
  if (frac_digits < 0 || frac_digits > kMaxFracDigits) throw std::invalid_argument("make_instance: bad scale");

  ProblemInstance inst;
  inst.delta = delta_units;
  inst.frac_digits = frac_digits;

  const std::size_t n = position_units.size();
  inst.perm.resize(n);
  std::iota(inst.perm.begin(), inst.perm.end(), std::size_t{0});
  std::stable_sort(inst.perm.begin(), inst.perm.end(),
                   [&](std::size_t a, std::size_t b) { return position_units[a] < position_units[b]; });

  inst.initial.resize(n);
  for (std::size_t i = 0; i < n; ++i) inst.initial[i] = position_units[inst.perm[i]];
  return inst;
}

ProblemInstance normalize_instance(std::span<const std::string> raw_positions, std::string_view delta_text) {
  Decimal delta = parse_decimal(delta_text);
  std::vector<Decimal> parsed;
  parsed.reserve(raw_positions.size());
  int frac = delta.frac_digits;
  for (const std::string& text : raw_positions) {
    parsed.push_back(parse_decimal(text));
    frac = std::max(frac, parsed.back().frac_digits);
  }

  std::vector<Int128> units;
  units.reserve(parsed.size());
  for (const Decimal& d : parsed) units.push_back(rescale(d, frac));
  return make_instance(rescale(delta, frac), std::move(units), frac);
}

Int128 total_cost(const ProblemInstance& inst, const Configuration& cfg) {
  if (cfg.size() != inst.size()) throw std::invalid_argument("total_cost: configuration size mismatch");
  Int128 sum = 0;
  for (std::size_t i = 0; i < cfg.size(); ++i) {
    sum = checked_add(sum, checked_abs(checked_sub(cfg[i], inst.initial[i])));
  }
  return sum;
}

std::string instance_to_text(const ProblemInstance& inst) {
  const std::size_t n = inst.size();
  std::vector<std::string> original(n);
  for (std::size_t i = 0; i < n; ++i) original[inst.perm[i]] = format_scaled(inst.initial[i], inst.frac_digits);

  std::string out = format_scaled(inst.delta, inst.frac_digits);
  out.push_back('\n');
  for (const std::string& p : original) {
    out += p;
    out.push_back('\n');
  }
  return out;
}

}  // namespace disperse
