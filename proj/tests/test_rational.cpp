#include <absorb/rational.hpp>

#include <gtest/gtest.h>

#include <stdexcept>

namespace absorb {
namespace {

TEST(Rational, ParsesFractionsAndDecimals) {
  EXPECT_EQ(parse_rational("3/4"), Rational(3, 4));
  EXPECT_EQ(parse_rational("-6/8"), Rational(-3, 4));
  EXPECT_EQ(parse_rational("0.1"), Rational(1, 10));
  EXPECT_EQ(parse_rational("-2.5"), Rational(-5, 2));
  EXPECT_EQ(parse_rational("7"), Rational(7));
  EXPECT_EQ(parse_rational("1e-3"), Rational(1, 1000));
}

TEST(Rational, RejectsGarbage) {
  EXPECT_THROW(parse_rational(""), std::invalid_argument);
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
  EXPECT_THROW(parse_rational("1/2/3"), std::invalid_argument);
}

TEST(Rational, DoubleUsesShortestDecimal) {
  EXPECT_EQ(rational_from_decimal_double(0.1), Rational(1, 10));
  EXPECT_EQ(rational_from_decimal_double(-0.25), Rational(-1, 4));
  EXPECT_EQ(rational_from_decimal_double(3.0), Rational(3));
  EXPECT_THROW(rational_from_decimal_double(std::nan("")), std::invalid_argument);
}

TEST(Rational, FormatRoundTrips) {
  EXPECT_EQ(format_rational(Rational(3, 4)), "3/4");
  EXPECT_EQ(format_rational(Rational(-5)), "-5");
  for (const char* text : {"1/3", "-22/7", "0", "12345678901234567890/7"})
    EXPECT_EQ(format_rational(parse_rational(text)), text);
}

TEST(Rational, ToDouble) {
  EXPECT_DOUBLE_EQ(to_double(Rational(1, 4)), 0.25);
  EXPECT_DOUBLE_EQ(to_double(2.5), 2.5);
}

}  // namespace
}  // namespace absorb
