#include "rbez/bernstein.hpp"

#include <gtest/gtest.h>

#include <random>

#include "test_support.hpp"

namespace rbez {
namespace {

using testing::expand_and_eval;
using testing::Q;

using RPoly = BernsteinPoly<Rational>;
using RVecPoly = BernsteinPoly<Vec<Rational>>;

RPoly poly(std::initializer_list<const char*> coeffs) {
  std::vector<Rational> out;
  for (const char* c : coeffs) out.push_back(Q(c));
  return RPoly(std::move(out));
}

std::vector<Rational> as_vector(const RPoly& p) { return {p.coeffs().begin(), p.coeffs().end()}; }

class RandomPolys : public ::testing::Test {
 protected:
  Rational small_rational() {
    Rational q(std::uniform_int_distribution<long>(-20, 20)(rng_),
               std::uniform_int_distribution<long>(1, 12)(rng_));
    q.canonicalize();
    return q;
  }
  RPoly random_poly(std::size_t max_degree) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(0, max_degree)(rng_);
    std::vector<Rational> c;
    for (std::size_t i = 0; i <= n; ++i) c.push_back(small_rational());
    return RPoly(std::move(c));
  }
  std::mt19937_64 rng_{99};
};

// --- eval -------------------------------------------------------------------

TEST(BernsteinEvalTest, QuadraticAtHalf) {
  // 2t(1-t) + 3t^2 = 2t + t^2, which is 5/4 at t = 1/2
  const auto p = poly({"0", "1", "3"});
  const Rational want = expand_and_eval(as_vector(p), Q("1/2"));
  EXPECT_EQ(want, Q("5/4"));
  EXPECT_EQ(eval(p, Q("1/2")), want);
}

TEST(BernsteinEvalTest, ConstantIsPartitionOfUnity) {
  const auto p = poly({"5", "5", "5", "5"});
  for (const char* t : {"0", "1/3", "1/2", "9/10", "1", "-2", "7/3"}) EXPECT_EQ(eval(p, Q(t)), Q(5)) << t;
}

TEST(BernsteinEvalTest, HalfBasisFunction) {
  const auto p = poly({"0", "1/2", "0"});
  EXPECT_EQ(expand_and_eval(as_vector(p), Q("1/4")), Q("3/16"));
  EXPECT_EQ(eval(p, Q("1/4")), Q("3/16"));
}

TEST(BernsteinEvalTest, EndpointInterpolation) {
  const auto p = poly({"2/3", "-1", "4", "11/5"});
  EXPECT_EQ(eval(p, Q(0)), Q("2/3"));
  EXPECT_EQ(eval(p, Q(1)), Q("11/5"));
}

TEST(BernsteinEvalTest, FloatDeCasteljauMatchesExact) {
  const auto p = poly({"1", "-2", "7/3", "4", "-1/2"});
  const BernsteinPoly<double> f({1.0, -2.0, 7.0 / 3.0, 4.0, -0.5});
  for (int i = 0; i <= 20; ++i) {
    const Rational t = from_ratio<Rational>(i, 20);
    EXPECT_NEAR(eval(f, to_double(t)), to_double(eval(p, t)), 1e-14);
  }
}

TEST_F(RandomPolys, EvalMatchesPowerBasisExpansionOffInterval) {
  for (int trial = 0; trial < 50; ++trial) {
    const auto p = random_poly(7);
    const Rational t = small_rational() * 3;
    EXPECT_EQ(eval(p, t), expand_and_eval(as_vector(p), t));
  }
}

TEST(BernsteinPolyTest, EmptyCoefficientsRejected) {
  EXPECT_THROW(RPoly(std::vector<Rational>{}), DomainError);
}

// --- forward differences ----------------------------------------------------

TEST(ForwardDifferenceTest, Examples) {
  const auto p = poly({"0", "1", "3"});
  EXPECT_EQ(forward_difference(p, 1), (std::vector<Rational>{Q(1), Q(2)}));
  EXPECT_EQ(forward_difference(p, 2), (std::vector<Rational>{Q(1)}));
  EXPECT_EQ(forward_difference(p, 0), as_vector(p));
  const auto c = poly({"7/2", "7/2", "7/2", "7/2"});
  EXPECT_EQ(forward_difference(c, 1), (std::vector<Rational>{Q(0), Q(0), Q(0)}));
}

TEST(ForwardDifferenceTest, OrderAboveDegree) {
  try {
    forward_difference(poly({"0", "1", "3"}), 3);
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_STREQ(e.what(), "difference order exceeds degree");
  }
}

TEST_F(RandomPolys, MatchesSignedBinomialExpansion) {
  for (int trial = 0; trial < 30; ++trial) {
    const auto p = random_poly(8);
    for (std::size_t k = 0; k <= p.degree(); ++k) {
      const auto got = forward_difference(p, k);
      ASSERT_EQ(got.size(), p.degree() - k + 1);
      for (std::size_t j = 0; j < got.size(); ++j) {
        Rational want = 0;
        for (std::size_t i = 0; i <= k; ++i) {
          Rational term = binomial<Rational>(k, i) * p[i + j];
          want += ((k - i) % 2 == 0) ? term : Rational(-term);
        }
        EXPECT_EQ(got[j], want);
      }
    }
  }
}

TEST_F(RandomPolys, ConstantSequencesDifferenceToZero) {
  for (std::size_t n = 1; n <= 9; ++n) {
    const Rational c = small_rational();
    const RPoly p(std::vector<Rational>(n + 1, c));
    for (std::size_t k = 1; k <= n; ++k) {
      for (const auto& d : forward_difference(p, k)) EXPECT_TRUE(is_zero(d));
    }
  }
}

// --- derivative ---------------------------------------------------------------

TEST(BernsteinDerivativeTest, Examples) {
  const auto p = poly({"0", "1", "3"});
  EXPECT_EQ(derivative(p, 1), poly({"2", "4"}));
  EXPECT_EQ(derivative(p, 2), poly({"2"}));
  EXPECT_EQ(derivative(p, 3), poly({"0"}));
  EXPECT_EQ(derivative(p, 0), p);
  EXPECT_EQ(derivative(poly({"-3/4", "5"}), 1), poly({"23/4"}));
}

TEST(BernsteinDerivativeTest, VectorCoefficientsBeyondDegreeGiveZeroOfSameDimension) {
  const RVecPoly p({Vec<Rational>({Q(1), Q(2)}), Vec<Rational>({Q(3), Q(-1)})});
  const auto d = derivative(p, 4);
  EXPECT_EQ(d.degree(), 0u);
  EXPECT_EQ(d[0], Vec<Rational>::zero(2));
}

TEST(BernsteinDerivativeTest, MatchesCentralDifferenceOnFloats) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> coef(-3.0, 3.0);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<double> c(6);
    for (auto& x : c) x = coef(rng);
    const BernsteinPoly<double> p(c);
    const auto dp = derivative(p, 1);
    for (double t : {0.1, 0.37, 0.5, 0.92}) {
      const double h = 1e-5;
      const double fd = (eval(p, t + h) - eval(p, t - h)) / (2 * h);
      EXPECT_NEAR(eval(dp, t), fd, 1e-6);
    }
  }
}

// --- product ------------------------------------------------------------------

TEST(BernsteinProductTest, Examples) {
  EXPECT_EQ(product(poly({"1", "0"}), poly({"0", "1"})), poly({"0", "1/2", "0"}));
  EXPECT_EQ(product(poly({"3"}), poly({"1", "-2", "5"})), poly({"3", "-6", "15"}));
  // (1+t)^2 has B-form coefficients 1, 2, 4
  EXPECT_EQ(product(poly({"1", "2"}), poly({"1", "2"})), poly({"1", "2", "4"}));
}

TEST(BernsteinProductTest, UnitTimesUnitIsUnit) {
  for (std::size_t a = 0; a <= 6; ++a) {
    for (std::size_t b = 0; b <= 6; ++b) EXPECT_EQ(product(unit_poly<Rational>(a), unit_poly<Rational>(b)), unit_poly<Rational>(a + b));
  }
}

TEST_F(RandomPolys, ProductEvaluatesToProductOfValues) {
  for (int trial = 0; trial < 100; ++trial) {
    const auto p = random_poly(6);
    const auto q = random_poly(6);
    const Rational t = small_rational();
    const auto pq = product(p, q);
    ASSERT_EQ(pq.degree(), p.degree() + q.degree());
    EXPECT_EQ(eval(pq, t), Rational(eval(p, t) * eval(q, t)));
  }
}

TEST_F(RandomPolys, VectorTimesScalarProductIsComponentwise) {
  for (int trial = 0; trial < 20; ++trial) {
    const auto x = random_poly(4);
    std::vector<Rational> y_coeffs(x.degree() + 1);
    for (auto& c : y_coeffs) c = small_rational();
    const RPoly y(y_coeffs);
    std::vector<Vec<Rational>> v;
    for (std::size_t i = 0; i <= x.degree(); ++i) v.push_back(Vec<Rational>({x[i], y[i]}));
    const auto q = random_poly(5);
    const auto vq = product(RVecPoly(v), q);
    const auto xq = product(x, q);
    const auto yq = product(y, q);
    for (std::size_t i = 0; i <= vq.degree(); ++i) EXPECT_EQ(vq[i], Vec<Rational>({xq[i], yq[i]}));
  }
}

TEST(BernsteinProductTest, FloatMatchesExactAtHighDegree) {
  // degree 300 x 300 exercises long-double scaled accumulation
  std::vector<Rational> a(301), b(301);
  std::vector<double> fa(301), fb(301);
  for (std::size_t i = 0; i <= 300; ++i) {
    a[i] = from_ratio<Rational>(static_cast<long>(1 + i % 7), 3);
    b[i] = from_ratio<Rational>(static_cast<long>(2 + i % 5), 4);
    fa[i] = to_double(a[i]);
    fb[i] = to_double(b[i]);
  }
  const auto exact = product(RPoly(a), RPoly(b));
  const auto approx = product(BernsteinPoly<double>(fa), BernsteinPoly<double>(fb));
  for (std::size_t i = 0; i <= 600; ++i) {
    const double want = to_double(exact[i]);
    EXPECT_NEAR(approx[i], want, 1e-13 * std::fabs(want)) << i;
  }
}

// --- elevation ----------------------------------------------------------------

TEST(BernsteinElevateTest, Examples) {
  const auto p = poly({"2", "-6"});
  EXPECT_EQ(elevate(p, 0), p);
  EXPECT_EQ(elevate(p, 1), poly({"2", "-2", "-6"}));
  EXPECT_EQ(elevate_once(p), poly({"2", "-2", "-6"}));
}

TEST_F(RandomPolys, ElevationPreservesValues) {
  for (int trial = 0; trial < 40; ++trial) {
    const auto p = random_poly(6);
    const auto e3 = elevate(p, 3);
    ASSERT_EQ(e3.degree(), p.degree() + 3);
    for (const char* t : {"0", "1/3", "1/2", "1", "-5/4", "12/7"}) EXPECT_EQ(eval(e3, Q(t)), eval(p, Q(t)));
  }
}

TEST_F(RandomPolys, OneStepRecurrenceEqualsProductRoute) {
  for (int trial = 0; trial < 40; ++trial) {
    const auto p = random_poly(9);
    EXPECT_EQ(elevate_once(p), elevate(p, 1));
    EXPECT_EQ(elevate_once(elevate_once(p)), elevate(p, 2));
  }
}

TEST(BinomialCacheTest, RowsAreExactAndSymmetric) {
  EXPECT_EQ(binomial<Rational>(10, 3), Q(120));
  EXPECT_EQ(binomial<Rational>(0, 0), Q(1));
  EXPECT_EQ(binomial<Rational>(3, 5), Q(0));
  BigInt c;
  mpz_bin_uiui(c.get_mpz_t(), 1280, 617);
  EXPECT_EQ(BinomialCache<Rational>::choose(1280, 617), c);
  const long double big = BinomialCache<double>::choose(2560, 1280);
  EXPECT_TRUE(std::isfinite(big));
  EXPECT_NEAR(static_cast<double>(BinomialCache<double>::choose(60, 30)), 118264581564861424.0, 1e3);
}

}  // namespace
}  // namespace rbez
