#include <gtest/gtest.h>

#include "lubanski/scalar.hpp"

using lubanski::Rational;
using lubanski::Scalar;

TEST(Scalar, GaussianArithmetic) {
  Scalar a(Rational(1, 2), Rational(-3)), b(Rational(2), Rational(1, 3));
  EXPECT_EQ(a + b, Scalar(Rational(5, 2), Rational(-8, 3)));
  EXPECT_EQ(a * b, Scalar(Rational(2), Rational(-35, 6)));
  EXPECT_EQ((a / b) * b, a);
  EXPECT_EQ(Scalar::i() * Scalar::i(), Scalar(-1));
  EXPECT_EQ(a.conj().conj(), a);
  EXPECT_EQ((a * a.conj()).str(), a.norm().get_str());
}

TEST(Scalar, DivisionByZeroThrows) {
  EXPECT_THROW(Scalar(1) / Scalar(), lubanski::DivisionByZero);
  EXPECT_FALSE(Scalar(1).try_div(Scalar()).has_value());
  EXPECT_THROW(Scalar().inverse(), lubanski::DivisionByZero);
}

TEST(Scalar, StringRoundTrip) {
  for (const char* s : {"0", "3/4", "-2", "i", "-i", "2i", "1/2-3i", "-5/7+2/3i", "3/2i"}) {
    Scalar x = Scalar::parse(s);
    EXPECT_EQ(Scalar::parse(x.str()), x) << s;
  }
  EXPECT_EQ(Scalar::frac(6, 8).str(), "3/4");
  EXPECT_EQ(Scalar(Rational(1, 2), Rational(-3)).str(), "1/2-3i");
  EXPECT_EQ((-Scalar::i()).str(), "-i");
}

TEST(Scalar, DecimalRenderingRoundsHalfAwayFromZero) {
  EXPECT_EQ(lubanski::decimal_string(Rational(1, 3), 4), "0.3333");
  EXPECT_EQ(lubanski::decimal_string(Rational(2, 3), 2), "0.67");
  EXPECT_EQ(lubanski::decimal_string(Rational(-1, 8), 2), "-0.13");
  EXPECT_EQ(lubanski::decimal_string(Rational(5), 0), "5");
}

TEST(Scalar, Predicates) {
  EXPECT_TRUE(Scalar().is_zero());
  EXPECT_TRUE(Scalar(3).is_real());
  EXPECT_TRUE(Scalar(Rational(2), Rational(-1)).is_gaussian_integer());
  EXPECT_FALSE(Scalar(Rational(1, 2), Rational(0)).is_gaussian_integer());
  EXPECT_THROW(Scalar::parse("1/0"), std::exception);
  EXPECT_THROW(Scalar::parse("abc"), std::exception);
}
