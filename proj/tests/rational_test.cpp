#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "lpp/rational.hpp"
#include "lpp/weight.hpp"

namespace lpp {
namespace {

TEST(ParseRational, FractionsAndIntegers) {
  EXPECT_EQ(parse_rational("-11/7"), Rational(-11, 7));
  EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
  EXPECT_EQ(parse_rational("+5"), Rational(5));
  EXPECT_EQ(parse_rational("0"), Rational(0));
}

TEST(ParseRational, RejectsMalformed) {
  for (const char* bad : {"", "1/0", "1/-2", "a/b", "1/", "/3", "1.5", "1 /2", "--1"}) {
    EXPECT_THROW(parse_rational(bad), std::invalid_argument) << bad;
  }
}

TEST(ParseRational, RoundTripsThroughString) {
  for (const char* s : {"-11/7", "3", "0", "1/2", "-5"}) {
    EXPECT_EQ(to_string(parse_rational(s)), s);
  }
}

TEST(RationalFloor, RoundsTowardMinusInfinity) {
  EXPECT_EQ(floor(Rational(-11, 7)), -2);
  EXPECT_EQ(floor(Rational(11, 7)), 1);
  EXPECT_EQ(floor(Rational(-3)), -3);
  EXPECT_EQ(floor(Rational(-1, 2)), -1);
}

TEST(ParseWeight, AcceptsEveryForm) {
  EXPECT_TRUE(parse_weight("-inf").is_minus_infinity());
  EXPECT_TRUE(parse_weight("-infinity").is_minus_infinity());
  EXPECT_EQ(parse_weight("-11/7").exact(), Rational(-11, 7));
  EXPECT_TRUE(parse_weight("0.25").is_float());
  EXPECT_DOUBLE_EQ(parse_weight("0.25").to_double(), 0.25);
  EXPECT_TRUE(parse_weight("1e-3").is_float());
  EXPECT_THROW(parse_weight("abc"), std::invalid_argument);
  EXPECT_THROW(parse_weight("inf"), std::invalid_argument);
}

TEST(ParseExactWeight, RefusesDecimalsAndInfinity) {
  EXPECT_EQ(parse_exact_weight("1/3"), Rational(1, 3));
  EXPECT_THROW(parse_exact_weight("0.5"), std::invalid_argument);
  EXPECT_THROW(parse_exact_weight("-inf"), std::invalid_argument);
  EXPECT_TRUE(looks_like_decimal("2.5"));
  EXPECT_TRUE(looks_like_decimal("1e3"));
  EXPECT_FALSE(looks_like_decimal("5/2"));
}

TEST(WeightParam, IntegersStayExact) {
  const WeightParam w(3);
  EXPECT_TRUE(w.is_exact());
  EXPECT_EQ(w.exact(), Rational(3));
  EXPECT_THROW(WeightParam(std::numeric_limits<double>::infinity()), std::invalid_argument);
  EXPECT_THROW(WeightParam(MinusInfinity{}).exact(), std::invalid_argument);
}

TEST(WeightParam, OrderPutsMinusInfinityFirst) {
  const WeightParam inf{MinusInfinity{}};
  EXPECT_TRUE(less(inf, WeightParam(Rational(-1000))));
  EXPECT_FALSE(less(inf, inf));
  EXPECT_TRUE(less(WeightParam(Rational(1, 3)), WeightParam(0.34)));
  EXPECT_FALSE(less(WeightParam(0.5), WeightParam(Rational(1, 2))));
}

TEST(ExtendedReal, MinusInfinityConvertsToIeee) {
  EXPECT_EQ(ExtendedReal(MinusInfinity{}).to_double(), -std::numeric_limits<double>::infinity());
  EXPECT_EQ(to_string(ExtendedReal(Rational(-5, 7))), "-5/7");
}

}  // namespace
}  // namespace lpp
