#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace disperse {

// All coordinates live on a shared power-of-ten grid; values of this type
// count grid units. 128 bits leave headroom for cost accumulation across
// n points (the README states the exact input bound).
using Int128 = __int128;

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

struct OverflowError : std::runtime_error {
  explicit OverflowError(const std::string& what) : std::runtime_error(what) {}
};

// Exact arithmetic; throws OverflowError instead of wrapping.
Int128 checked_add(Int128 a, Int128 b);
Int128 checked_sub(Int128 a, Int128 b);
Int128 checked_mul(Int128 a, Int128 b);
Int128 checked_abs(Int128 v);

// Denominator cap: at most 18 fractional digits (scale 10^18).
inline constexpr int kMaxFracDigits = 18;

// A decimal literal split into mantissa and fractional digit count, with
// the sign on the mantissa: "2.50" -> {250, 2}, "-3.125" -> {-3125, 3}.
struct Decimal {
  Int128 mantissa = 0;
  int frac_digits = 0;
};

// Accepts [+-]? digits [. digits]? and nothing else.
Decimal parse_decimal(std::string_view text);

// Re-expresses a parsed literal in units of 10^-frac_digits.
Int128 rescale(const Decimal& d, int frac_digits);

std::int64_t pow10(int digits);

// Canonical rendering of `units` grid units at 10^-frac_digits resolution:
// exact value, trailing fractional zeros trimmed ("2.50" round-trips to "2.5").
std::string format_scaled(Int128 units, int frac_digits);

}  // namespace disperse

// Stream output for raw grid units, mainly for logs and test diagnostics.
std::ostream& operator<<(std::ostream& os, __int128 v);
