#ifndef RBEZ_TEST_SUPPORT_HPP
#define RBEZ_TEST_SUPPORT_HPP

#include <string>
#include <vector>

#include "rbez/curve.hpp"
#include "rbez/numeric.hpp"

namespace rbez::testing {

inline Rational Q(const char* text) { return parse_scalar<Rational>(text); }
inline Rational Q(long n) { return Rational(n); }
inline Rational Q(int n) { return Rational(n); }  // keeps Q(0) off the const char* overload

inline Vec<Rational> V(std::initializer_list<long> xs) {
  std::vector<Rational> out;
  for (long x : xs) out.emplace_back(x);
  return Vec<Rational>(std::move(out));
}

inline Vec<Rational> V1(const Rational& x) { return Vec<Rational>({x}); }

inline RationalBezierCurve<Rational> curve_from(std::vector<Rational> weights, std::vector<Vec<Rational>> points) {
  return RationalBezierCurve<Rational>::validate(std::move(weights), std::move(points));
}

/// w = (1, 2), r = (0), (1): c(t) = 2t / (1 + t).
inline RationalBezierCurve<Rational> line_fixture() { return curve_from({Q(1), Q(2)}, {V({0}), V({1})}); }

/// w = (1, 1, 2), r = (0), (1), (0).
inline RationalBezierCurve<Rational> quadratic_fixture() {
  return curve_from({Q(1), Q(1), Q(2)}, {V({0}), V({1}), V({0})});
}

/// Power-basis value of a B-form, independent of de Casteljau:
///   sum_i c_i C(n,i) t^i (1-t)^(n-i) expanded with explicit binomial loops.
inline Rational expand_and_eval(const std::vector<Rational>& coeffs, const Rational& t) {
  const std::size_t n = coeffs.size() - 1;
  auto choose = [](std::size_t a, std::size_t b) {
    BigInt r = 1;
    for (std::size_t i = 0; i < b; ++i) {
      r *= static_cast<unsigned long>(a - i);
      r /= static_cast<unsigned long>(i + 1);
    }
    return r;
  };
  // power coefficients a_m = sum_{i<=m} c_i C(n,i) C(n-i,m-i) (-1)^(m-i)
  std::vector<Rational> power(n + 1, Rational(0));
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t m = i; m <= n; ++m) {
      Rational term = coeffs[i] * Rational(choose(n, i) * choose(n - i, m - i));
      if ((m - i) % 2 == 1) term = -term;
      power[m] += term;
    }
  }
  Rational acc = 0;
  for (std::size_t m = n + 1; m-- > 0;) acc = acc * t + power[m];
  return acc;
}

}  // namespace rbez::testing

#endif  // RBEZ_TEST_SUPPORT_HPP
