#include <doctest.h>

#include <random>
#include <string>

#include "scalar.hpp"

using namespace disperse;

TEST_CASE("parse_decimal splits literals exactly") {
  Decimal d = parse_decimal("2.50");
  CHECK(d.mantissa == Int128{250});
  CHECK(d.frac_digits == 2);

  d = parse_decimal("0");
  CHECK(d.mantissa == 0);
  CHECK(d.frac_digits == 0);

  d = parse_decimal("-3.125");
  CHECK(d.mantissa == Int128{-3125});
  CHECK(d.frac_digits == 3);

  d = parse_decimal("+41");
  CHECK(d.mantissa == Int128{41});
  CHECK(d.frac_digits == 0);
}

TEST_CASE("parse_decimal rejects malformed literals") {
  CHECK_THROWS_AS(parse_decimal(""), ParseError);
  CHECK_THROWS_AS(parse_decimal("-"), ParseError);
  CHECK_THROWS_AS(parse_decimal(".5"), ParseError);
  CHECK_THROWS_AS(parse_decimal("1."), ParseError);
  CHECK_THROWS_AS(parse_decimal("1e5"), ParseError);
  CHECK_THROWS_AS(parse_decimal("1 2"), ParseError);
  CHECK_THROWS_AS(parse_decimal("--3"), ParseError);
  // denominator cap: 19 fractional digits
  CHECK_THROWS_AS(parse_decimal("0.0000000000000000001"), ParseError);
  CHECK_NOTHROW(parse_decimal("0.000000000000000001"));
}

TEST_CASE("parse_decimal reports overflow instead of wrapping") {
  // 40 digits does not fit 128 bits
  CHECK_THROWS_AS(parse_decimal(std::string(40, '9')), OverflowError);
}

TEST_CASE("format_scaled renders canonical decimals") {
  CHECK(format_scaled(250, 2) == "2.5");
  CHECK(format_scaled(0, 5) == "0");
  CHECK(format_scaled(-3125, 3) == "-3.125");
  CHECK(format_scaled(-10, 1) == "-1");
  CHECK(format_scaled(7, 0) == "7");
  CHECK(format_scaled(5, 3) == "0.005");
  CHECK(format_scaled(-5, 3) == "-0.005");
}

TEST_CASE("parse/format round trip preserves the value") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    const long long mantissa = static_cast<long long>(rng() % 2000000001ULL) - 1000000000LL;
    const int frac = static_cast<int>(rng() % 7);
    const std::string text = format_scaled(mantissa, frac);
    const Decimal back = parse_decimal(text);
    CHECK(rescale(back, frac) == Int128{mantissa});
    // canonical form is a fixpoint
    CHECK(format_scaled(back.mantissa, back.frac_digits) == text);
  }
}

TEST_CASE("checked arithmetic throws on 128-bit overflow") {
  const Int128 big = (Int128{1} << 126) + ((Int128{1} << 126) - 1);  // 2^127 - 1
  CHECK_THROWS_AS(checked_add(big, Int128{1}), OverflowError);
  CHECK_THROWS_AS(checked_sub(-big - 1, Int128{1}), OverflowError);
  CHECK_THROWS_AS(checked_mul(big, Int128{2}), OverflowError);
  CHECK_THROWS_AS(checked_abs(-big - 1), OverflowError);
  CHECK(checked_add(big, Int128{0}) == big);
  CHECK(checked_abs(-big) == big);
}

TEST_CASE("rescale moves to a finer grid only") {
  CHECK(rescale(Decimal{25, 1}, 3) == Int128{2500});
  CHECK_THROWS_AS(rescale(Decimal{25, 3}, 1), std::invalid_argument);
}
