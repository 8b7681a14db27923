#include <gtest/gtest.h>

#include "mutinv/integer.hpp"

using namespace mutinv;

TEST(Integer, ParseAndPrint) {
  EXPECT_EQ(parse_integer("-42"), -42);
  EXPECT_EQ(parse_integer("+7"), 7);
  EXPECT_EQ(to_string(parse_integer("123456789012345678901234567890")), "123456789012345678901234567890");
  EXPECT_THROW(parse_integer(""), std::invalid_argument);
  EXPECT_THROW(parse_integer("12a"), std::invalid_argument);
  EXPECT_THROW(parse_integer("-"), std::invalid_argument);
}

TEST(Integer, RationalText) {
  EXPECT_EQ(to_string(Rational(9, 4)), "9/4");
  EXPECT_EQ(to_string(Rational(-2)), "-2");
}

TEST(Integer, SquaresAndRoots) {
  EXPECT_TRUE(is_square(0));
  EXPECT_TRUE(is_square(144));
  EXPECT_FALSE(is_square(2));
  EXPECT_FALSE(is_square(-4));
  EXPECT_EQ(isqrt(99), 9);
  EXPECT_EQ(isqrt(100), 10);
}

TEST(Integer, Powers) {
  EXPECT_EQ(pow(Integer(3), 40), parse_integer("12157665459056928801"));
  EXPECT_EQ(pow(Rational(2, 3), -2), Rational(9, 4));
  EXPECT_EQ(pow(Rational(5), 0), Rational(1));
}

TEST(Integer, FloorOfRational) {
  EXPECT_EQ(floor_of(Rational(7, 2)), 3);
  EXPECT_EQ(floor_of(Rational(-7, 2)), -4);
  EXPECT_EQ(floor_of(Rational(6)), 6);
}

TEST(Integer, Divisors) {
  std::vector<Integer> d{1, 2, 4, 8, 16};
  EXPECT_EQ(positive_divisors(16), d);
  EXPECT_EQ(positive_divisors(-6), (std::vector<Integer>{1, 2, 3, 6}));
}

TEST(Integer, ExponentRange) {
  EXPECT_EQ(to_exponent(Integer(12)), 12);
  EXPECT_THROW(to_exponent(pow(Integer(10), 30)), std::overflow_error);
}
