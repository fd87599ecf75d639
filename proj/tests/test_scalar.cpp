#include "ncpoisson/scalar.hpp"

#include <random>

#include <gtest/gtest.h>

#include "ncpoisson/errors.hpp"

using ncpoisson::Error;
using ncpoisson::Scalar;

TEST(Scalar, CanonicalForm) {
  EXPECT_EQ(Scalar(2, 4).str(), "1/2");
  EXPECT_EQ(Scalar(-2, 4).str(), "-1/2");
  EXPECT_EQ(Scalar(2, -4).str(), "-1/2");
  EXPECT_EQ(Scalar(-2, -4).str(), "1/2");
  EXPECT_EQ(Scalar(6, 3).str(), "2");
  EXPECT_EQ(Scalar(0, 7).str(), "0");
  EXPECT_EQ(Scalar(2, 4), Scalar(1, 2));
}

TEST(Scalar, ParseAcceptsCanonicalAndSignedForms) {
  EXPECT_EQ(Scalar::parse("3"), Scalar(3));
  EXPECT_EQ(Scalar::parse("-3"), Scalar(-3));
  EXPECT_EQ(Scalar::parse("+3"), Scalar(3));
  EXPECT_EQ(Scalar::parse("3/6"), Scalar(1, 2));
  EXPECT_EQ(Scalar::parse("3/-6"), Scalar(-1, 2));
  EXPECT_EQ(Scalar::parse("-10/4"), Scalar(-5, 2));
}

TEST(Scalar, ParseRejectsGarbage) {
  for (const char* bad : {"", "1/0", "1.5", "a", "1/", "/2", "1//2", "1 / 2", "0x3"}) {
    EXPECT_THROW(Scalar::parse(bad), Error) << bad;
  }
  EXPECT_THROW(Scalar(1, 0), Error);
}

TEST(Scalar, DivisionByZeroRaises) {
  EXPECT_THROW(Scalar(1) / Scalar(0), Error);
}

TEST(Scalar, ExactFieldArithmetic) {
  // (a/b + c/d) * (b*d) must equal a*d + c*b exactly, for many random inputs.
  std::mt19937_64 rng(20240817);
  std::uniform_int_distribution<long> num(-1000, 1000);
  std::uniform_int_distribution<long> den(1, 1000);
  for (int i = 0; i < 1000; ++i) {
    long a = num(rng), b = den(rng), c = num(rng), d = den(rng);
    Scalar lhs = (Scalar(a, b) + Scalar(c, d)) * Scalar(b * d);
    Scalar rhs = Scalar(a * d + c * b);
    EXPECT_EQ(lhs, rhs) << a << "/" << b << " + " << c << "/" << d;
  }
}

TEST(Scalar, StrRoundTrips) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-5000, 5000);
  std::uniform_int_distribution<long> den(1, 5000);
  for (int i = 0; i < 200; ++i) {
    Scalar s(num(rng), den(rng));
    EXPECT_EQ(Scalar::parse(s.str()), s);
  }
}
