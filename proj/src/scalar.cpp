#include "scalar.hpp"

#include <array>
#include <ostream>

namespace disperse {

Int128 checked_add(Int128 a, Int128 b) {
  Int128 r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("addition overflow");
  return r;
}

Int128 checked_sub(Int128 a, Int128 b) {
  Int128 r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("subtraction overflow");
  return r;
}

Int128 checked_mul(Int128 a, Int128 b) {
  Int128 r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("multiplication overflow");
  return r;
}

Int128 checked_abs(Int128 v) {
  if (v >= 0) return v;
  return checked_sub(Int128{0}, v);
}

std::int64_t pow10(int digits) {
  static constexpr std::array<std::int64_t, 19> table = {
      1LL,
      10LL,
      100LL,
      1000LL,
      10000LL,
      100000LL,
      1000000LL,
      10000000LL,
      100000000LL,
      1000000000LL,
      10000000000LL,
      100000000000LL,
      1000000000000LL,
      10000000000000LL,
      100000000000000LL,
      1000000000000000LL,
      10000000000000000LL,
      100000000000000000LL,
      1000000000000000000LL};
  if (digits < 0 || digits > kMaxFracDigits) throw std::invalid_argument("pow10: exponent out of range");
  return table[static_cast<std::size_t>(digits)];
}

Decimal parse_decimal(std::string_view text) {
  std::string_view s = text;
  if (s.empty()) throw ParseError("empty decimal literal");

  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) throw ParseError("decimal literal '" + std::string(text) + "' has no digits");

  Int128 mantissa = 0;
  std::size_t i = 0;
  std::size_t int_digits = 0;
  for (; i < s.size() && s[i] >= '0' && s[i] <= '9'; ++i, ++int_digits) {
    mantissa = checked_add(checked_mul(mantissa, 10), s[i] - '0');
  }
  if (int_digits == 0) throw ParseError("decimal literal '" + std::string(text) + "' must start with a digit");

  int frac_digits = 0;
  if (i < s.size() && s[i] == '.') {
    ++i;
    std::size_t start = i;
    for (; i < s.size() && s[i] >= '0' && s[i] <= '9'; ++i, ++frac_digits) {
      mantissa = checked_add(checked_mul(mantissa, 10), s[i] - '0');
    }
    if (i == start) throw ParseError("decimal literal '" + std::string(text) + "' ends at the decimal point");
    if (frac_digits > kMaxFracDigits)
      throw ParseError("decimal literal '" + std::string(text) + "' exceeds " +
                       std::to_string(kMaxFracDigits) + " fractional digits");
  }
  if (i != s.size()) throw ParseError("decimal literal '" + std::string(text) + "' has trailing characters");

  if (negative) mantissa = checked_sub(Int128{0}, mantissa);
  return Decimal{mantissa, frac_digits};
}

Int128 rescale(const Decimal& d, int frac_digits) {
  if (frac_digits < d.frac_digits) throw std::invalid_argument("rescale: target scale is coarser than the literal");
  return checked_mul(d.mantissa, pow10(frac_digits - d.frac_digits));
}

std::string format_scaled(Int128 units, int frac_digits) {
  unsigned __int128 mag = units < 0 ? static_cast<unsigned __int128>(0) - static_cast<unsigned __int128>(units)
                                    : static_cast<unsigned __int128>(units);
  std::string digits;
  do {
    digits.push_back(static_cast<char>('0' + static_cast<int>(mag % 10)));
    mag /= 10;
  } while (mag != 0);
  // digits is little-endian here; pad so there is at least one integer digit
  while (digits.size() <= static_cast<std::size_t>(frac_digits)) digits.push_back('0');

  std::string out;
  if (units < 0) out.push_back('-');
  for (std::size_t k = digits.size(); k > static_cast<std::size_t>(frac_digits); --k) out.push_back(digits[k - 1]);

  // digits below `low` are trailing fractional zeros
  std::size_t low = 0;
  while (low < static_cast<std::size_t>(frac_digits) && digits[low] == '0') ++low;
  if (low < static_cast<std::size_t>(frac_digits)) {
    out.push_back('.');
    for (std::size_t k = frac_digits; k > low; --k) out.push_back(digits[k - 1]);
  }
  return out;
}

}  // namespace disperse

std::ostream& operator<<(std::ostream& os, __int128 v) {
  return os << disperse::format_scaled(v, 0);
}
