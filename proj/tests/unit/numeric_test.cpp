#include "rbez/numeric.hpp"

#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"

namespace rbez {
namespace {

using testing::Q;

TEST(LpNormTest, PythagoreanTriple) {
  EXPECT_EQ(lp_norm(Vec<Rational>({Q(3), Q(4)}), Norm::L2), Q(5));
  EXPECT_DOUBLE_EQ(lp_norm(Vec<double>({3.0, 4.0}), Norm::L2), 5.0);
}

TEST(LpNormTest, OneAndInfinity) {
  const Vec<Rational> v({Q(3), Q(-4)});
  EXPECT_EQ(lp_norm(v, Norm::L1), Q(7));
  EXPECT_EQ(lp_norm(v, Norm::LInf), Q(4));
  EXPECT_EQ(squared_l2(v), Q(25));
}

TEST(LpNormTest, UnsupportedNorm) {
  EXPECT_THROW(parse_norm("3"), DomainError);
  try {
    parse_norm("0.5");
  } catch (const DomainError& e) {
    EXPECT_STREQ(e.what(), "unsupported norm");
  }
  EXPECT_EQ(parse_norm("inf"), Norm::LInf);
  EXPECT_EQ(parse_norm("1"), Norm::L1);
}

TEST(LpNormTest, EmptyVectorRejected) { EXPECT_THROW(lp_norm(Vec<double>(), Norm::L1), DomainError); }

TEST(ScalarParseTest, Fractions) {
  EXPECT_EQ(parse_scalar<Rational>("1/3"), Rational(1, 3));
  EXPECT_EQ(parse_scalar<Rational>("-4/6"), Rational(-2, 3));
  EXPECT_EQ(parse_scalar<Rational>(" 7 "), Rational(7));
  EXPECT_EQ(parse_scalar<Rational>("-1.25"), Rational(-5, 4));
  EXPECT_EQ(parse_scalar<Rational>("2.5e-3"), Rational(1, 400));
  EXPECT_EQ(parse_scalar<Rational>("1E2"), Rational(100));
  EXPECT_EQ(parse_scalar<Rational>(".5"), Rational(1, 2));
  EXPECT_DOUBLE_EQ(parse_scalar<double>("1/4"), 0.25);
  EXPECT_DOUBLE_EQ(parse_scalar<double>("0.1"), 0.1);
}

TEST(ScalarParseTest, Rejects) {
  for (const char* bad : {"", "abc", "1/0", "1/", "/2", "1.2.3", "1e", "--1", "1/2/3", "0x10"}) {
    EXPECT_THROW(parse_scalar<Rational>(bad), ParseError) << bad;
    EXPECT_THROW(parse_scalar<double>(bad), ParseError) << bad;
  }
}

TEST(ScalarFormatTest, LowestTermsAndSeventeenDigits) {
  EXPECT_EQ(format_scalar(from_ratio<Rational>(6, 4)), "3/2");
  EXPECT_EQ(format_scalar(Q("-12")), "-12");
  EXPECT_EQ(format_scalar(2.0 / 3.0), "0.66666666666666663");
  EXPECT_EQ(format_scalar(-0.0), "0");
  EXPECT_EQ(parse_scalar<double>(format_scalar(0.1 + 0.2)), 0.1 + 0.2);
}

TEST(ScalarTest, IntegerInjectionIsMultiplicative) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::int64_t> dist(-3'000'000'000LL, 3'000'000'000LL);
  for (int i = 0; i < 200; ++i) {
    const std::int64_t m = dist(rng);
    const std::int64_t n = dist(rng);
    BigInt product = BigInt(static_cast<long>(m)) * BigInt(static_cast<long>(n));
    EXPECT_EQ(from_int<Rational>(m) * from_int<Rational>(n), Rational(product));
  }
}

TEST(ScalarTest, PowerBySquaring) {
  EXPECT_EQ(power(Q("3/2"), 5), Rational(243, 32));
  EXPECT_EQ(power(Q(7), 0), Q(1));
  EXPECT_DOUBLE_EQ(power(2.0, 10), 1024.0);
}

class RationalFieldTest : public ::testing::Test {
 protected:
  Rational random_rational() {
    std::uniform_int_distribution<long> num(-1000, 1000);
    std::uniform_int_distribution<long> den(1, 97);
    Rational q(num(rng_), den(rng_));
    q.canonicalize();
    return q;
  }
  std::mt19937_64 rng_{2024};
};

TEST_F(RationalFieldTest, AssociativityAndDistributivityAreExact) {
  for (int i = 0; i < 1000; ++i) {
    const Rational a = random_rational();
    const Rational b = random_rational();
    const Rational c = random_rational();
    EXPECT_EQ(Rational((a + b) + c), Rational(a + (b + c)));
    EXPECT_EQ(Rational(a * (b + c)), Rational(a * b + a * c));
    if (!is_zero(b)) EXPECT_EQ(Rational((a / b) * b), a);
  }
}

TEST_F(RationalFieldTest, FloatProductsTrackExactProducts) {
  std::uniform_int_distribution<int> count(1, 8);
  for (int i = 0; i < 1000; ++i) {
    Rational exact = 1;
    double approx = 1.0;
    const int factors = count(rng_);
    for (int f = 0; f < factors; ++f) {
      Rational x = random_rational();
      if (is_zero(x)) x = 1;
      exact *= x;
      approx *= to_double(x);
    }
    const double want = to_double(exact);
    EXPECT_LE(std::fabs(approx - want), 1e-12 * std::fabs(want));
  }
}

TEST(VecTest, ComponentwiseOperations) {
  const Vec<Rational> a({Q(1), Q("1/2")});
  const Vec<Rational> b({Q(-3), Q(2)});
  EXPECT_EQ(a + b, Vec<Rational>({Q(-2), Q("5/2")}));
  EXPECT_EQ(a - b, Vec<Rational>({Q(4), Q("-3/2")}));
  EXPECT_EQ(a * Q(2), Vec<Rational>({Q(2), Q(1)}));
  EXPECT_EQ(-a, Vec<Rational>({Q(-1), Q("-1/2")}));
  EXPECT_EQ((a + b).dim(), 2u);
  EXPECT_THROW(a + Vec<Rational>({Q(1)}), DomainError);
  EXPECT_THROW(a / Q(0), DomainError);
  EXPECT_TRUE(Vec<Rational>::zero(3).is_zero());
}

}  // namespace
}  // namespace rbez
