#include "rbez/oracle.hpp"

#include <cmath>

namespace rbez::oracle {

Vec<double> central_difference(const std::function<Vec<double>(double)>& f, std::size_t order, double t,
                               double step) {
  if (!(step > 0.0)) throw DomainError("finite-difference step must be positive");
  const double half = static_cast<double>(order) / 2.0;
  std::optional<Vec<double>> acc;
  for (std::size_t i = 0; i <= order; ++i) {
    const double weight = ((i % 2 == 0) ? 1.0 : -1.0) * binomial<double>(order, i);
    Vec<double> term = f(t + (half - static_cast<double>(i)) * step) * weight;
    acc = acc ? *acc + term : term;
  }
  return *acc / std::pow(step, static_cast<double>(order));
}

double default_fd_step(const RationalBezierCurve<double>& curve) {
  double scale = 1.0;
  for (const auto& p : curve.points()) {
    for (double c : p.components()) scale = std::max(scale, std::fabs(c));
  }
  return 1e-4 * scale;
}

Vec<double> finite_difference(const RationalBezierCurve<double>& curve, std::size_t order, double t,
                              const OracleConfig& config) {
  if (order > config.fd_order_limit) {
    throw DomainError("finite-difference order too high for float precision");
  }
  if (order == 0) return point_at(curve, t);
  const double step = config.fd_step.value_or(default_fd_step(curve));
  const auto den = denominator_poly(curve);
  return central_difference(
      [&](double s) {
        if (!(eval(den, s) > 0.0)) throw PoleError("finite-difference stencil reaches a pole");
        return point_at(curve, s);
      },
      order, t, step);
}

}  // namespace rbez::oracle
