#include "rbez/random_curve.hpp"

namespace rbez {

std::int64_t RandomCurveGenerator::integer(std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(engine_);
}

Rational RandomCurveGenerator::weight() {
  const std::int64_t q = integer(1, 64);
  const std::int64_t p = integer((q + 1) / 2, 4 * q);
  return from_ratio<Rational>(p, q);
}

Vec<Rational> RandomCurveGenerator::point(std::size_t dim) {
  std::vector<Rational> coords;
  coords.reserve(dim);
  for (std::size_t c = 0; c < dim; ++c) coords.push_back(from_int<Rational>(integer(-8, 8)));
  return Vec<Rational>(std::move(coords));
}

RationalBezierCurve<Rational> RandomCurveGenerator::curve(std::size_t degree, std::size_t dim) {
  if (degree < 1) throw DomainError("degree must be >= 1");
  if (dim < 1) throw DomainError("dimension must be >= 1");
  std::vector<Rational> weights;
  std::vector<Vec<Rational>> points;
  for (std::size_t i = 0; i <= degree; ++i) weights.push_back(weight());
  for (std::size_t i = 0; i <= degree; ++i) points.push_back(point(dim));
  return RationalBezierCurve<Rational>::validate(std::move(weights), std::move(points));
}

}  // namespace rbez
