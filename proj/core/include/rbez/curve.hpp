#ifndef RBEZ_CURVE_HPP
#define RBEZ_CURVE_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "rbez/bernstein.hpp"
#include "rbez/numeric.hpp"

namespace rbez {

/// c(t) = sum w_i r_i B_i^n(t) / sum w_i B_i^n(t) with strictly positive
/// weights. Immutable once validated.
template <Scalar S>
class RationalBezierCurve {
 public:
  /// Throws ValidationError when the raw data does not describe a curve.
  static RationalBezierCurve validate(std::vector<S> weights, std::vector<Vec<S>> points) {
    if (weights.size() < 2 && points.size() < 2) {
      if (weights.size() != points.size()) throw ValidationError("weights/points length mismatch");
      throw ValidationError("degree must be >= 1");
    }
    if (weights.size() != points.size()) throw ValidationError("weights/points length mismatch");
    for (const S& w : weights) {
      if (!(w > from_int<S>(0))) throw ValidationError("weight must be positive");
    }
    const std::size_t d = points.front().dim();
    if (d == 0) throw ValidationError("inconsistent dimension");
    for (const auto& p : points) {
      if (p.dim() != d) throw ValidationError("inconsistent dimension");
    }
    return RationalBezierCurve(std::move(weights), std::move(points));
  }

  std::size_t degree() const { return weights_.size() - 1; }
  std::size_t dim() const { return points_.front().dim(); }
  std::span<const S> weights() const { return weights_; }
  std::span<const Vec<S>> points() const { return points_; }

  /// Same curve traversed backwards: weights and points in reverse order.
  RationalBezierCurve reversed() const {
    return RationalBezierCurve(std::vector<S>(weights_.rbegin(), weights_.rend()),
                               std::vector<Vec<S>>(points_.rbegin(), points_.rend()));
  }

  /// Same weights, different control points (same count and dimension rules).
  RationalBezierCurve with_points(std::vector<Vec<S>> points) const {
    return validate(weights_, std::move(points));
  }

 private:
  RationalBezierCurve(std::vector<S> weights, std::vector<Vec<S>> points)
      : weights_(std::move(weights)), points_(std::move(points)) {}

  std::vector<S> weights_;
  std::vector<Vec<S>> points_;
};

/// Coefficients w_i r_i.
template <Scalar S>
BernsteinPoly<Vec<S>> numerator_poly(const RationalBezierCurve<S>& curve) {
  std::vector<Vec<S>> coeffs;
  coeffs.reserve(curve.degree() + 1);
  for (std::size_t i = 0; i <= curve.degree(); ++i) {
    coeffs.push_back(curve.points()[i] * curve.weights()[i]);
  }
  return BernsteinPoly<Vec<S>>(std::move(coeffs));
}

/// Coefficients w_i.
template <Scalar S>
BernsteinPoly<S> denominator_poly(const RationalBezierCurve<S>& curve) {
  return BernsteinPoly<S>(std::vector<S>(curve.weights().begin(), curve.weights().end()));
}

/// c(t). Parameters outside [0,1] are allowed; throws PoleError where the
/// denominator vanishes.
template <Scalar S>
Vec<S> point_at(const RationalBezierCurve<S>& curve, const S& t) {
  const S denom = eval(denominator_poly(curve), t);
  if (is_zero(denom)) throw PoleError();
  return eval(numerator_poly(curve), t) / denom;
}

/// Converts an exactly specified curve to another scalar type.
template <Scalar S>
RationalBezierCurve<S> convert_curve(const RationalBezierCurve<Rational>& curve) {
  std::vector<S> weights;
  std::vector<Vec<S>> points;
  for (const Rational& w : curve.weights()) weights.push_back(convert_scalar<S>(w));
  for (const auto& p : curve.points()) points.push_back(convert_vec<S>(p));
  return RationalBezierCurve<S>::validate(std::move(weights), std::move(points));
}

}  // namespace rbez

#endif  // RBEZ_CURVE_HPP
