#ifndef RBEZ_RANDOM_CURVE_HPP
#define RBEZ_RANDOM_CURVE_HPP

#include <cstddef>
#include <cstdint>
#include <random>

#include "rbez/curve.hpp"

namespace rbez {

/// Seeded generator of exact test curves: weights p/q in [1/2, 4] with
/// q <= 64, integer point coordinates in [-8, 8].
class RandomCurveGenerator {
 public:
  explicit RandomCurveGenerator(std::uint64_t seed) : engine_(seed) {}

  RationalBezierCurve<Rational> curve(std::size_t degree, std::size_t dim);
  Rational weight();
  Vec<Rational> point(std::size_t dim);
  std::int64_t integer(std::int64_t lo, std::int64_t hi);

 private:
  std::mt19937_64 engine_;
};

inline RationalBezierCurve<Rational> random_curve(std::size_t degree, std::size_t dim, std::uint64_t seed) {
  return RandomCurveGenerator(seed).curve(degree, dim);
}

}  // namespace rbez

#endif  // RBEZ_RANDOM_CURVE_HPP
