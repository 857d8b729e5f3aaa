#ifndef RBEZ_ORACLE_HPP
#define RBEZ_ORACLE_HPP

// Independent derivative computations. Nothing here touches the
// degree-doubling tables in deriv.hpp.

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "rbez/bernstein.hpp"
#include "rbez/curve.hpp"
#include "rbez/numeric.hpp"

namespace rbez::oracle {

/// Leibniz recursion on c = r / w:
///   c^{(m)} = (r^{(m)} - sum_{j=1}^{m} C(m,j) w^{(j)} c^{(m-j)}) / w.
/// Derivatives of r and w beyond their degree are zero, so the recursion is
/// valid for every order.
template <Scalar S>
Vec<S> leibniz_derivative(const RationalBezierCurve<S>& curve, std::size_t order, const S& t) {
  const auto num = numerator_poly(curve);
  const auto den = denominator_poly(curve);
  const S w = eval(den, t);
  if (is_zero(w)) throw PoleError();

  std::vector<Vec<S>> r_derivs;
  std::vector<S> w_derivs;
  r_derivs.reserve(order + 1);
  w_derivs.reserve(order + 1);
  for (std::size_t j = 0; j <= order; ++j) {
    r_derivs.push_back(eval(derivative(num, j), t));
    w_derivs.push_back(eval(derivative(den, j), t));
  }

  std::vector<Vec<S>> c;  // c[m] = c^{(m)}(t), memoized within this call
  c.reserve(order + 1);
  for (std::size_t m = 0; m <= order; ++m) {
    Vec<S> acc = r_derivs[m];
    for (std::size_t j = 1; j <= m; ++j) {
      if (is_zero(w_derivs[j])) continue;
      acc = acc - c[m - j] * (binomial<S>(m, j) * w_derivs[j]);
    }
    c.push_back(acc / w);
  }
  return c[order];
}

/// Closed form for the degree-1 curve, a Moebius reparametrised segment:
///   c^{(k)}(t) = (-1)^{k-1} k! w0 w1 (w1 - w0)^{k-1} (r1 - r0) / D(t)^{k+1},
///   D(t) = w0 (1 - t) + w1 t.
template <Scalar S>
Vec<S> closed_form_line(const S& w0, const S& w1, const Vec<S>& r0, const Vec<S>& r1, std::size_t order,
                        const S& t) {
  if (order == 0) throw DomainError("closed form requires k >= 1");
  const S d = w0 * (from_int<S>(1) - t) + w1 * t;
  if (is_zero(d)) throw PoleError();
  S coeff = from_int<S>(order % 2 == 1 ? 1 : -1);
  for (std::size_t i = 2; i <= order; ++i) coeff = coeff * from_int<S>(static_cast<std::int64_t>(i));
  coeff = coeff * w0 * w1 * power(S(w1 - w0), order - 1) / power(d, order + 1);
  return (r1 - r0) * coeff;
}

template <Scalar S>
Vec<S> closed_form_line(const RationalBezierCurve<S>& curve, std::size_t order, const S& t) {
  if (curve.degree() != 1) throw DomainError("closed form applies to degree-1 curves only");
  return closed_form_line(curve.weights()[0], curve.weights()[1], curve.points()[0], curve.points()[1],
                          order, t);
}

struct OracleConfig {
  /// Defaults to 1e-4 * max(1, max |control point component|).
  std::optional<double> fd_step;
  std::size_t fd_order_limit = 4;
};

/// k-th central difference of f with step h:
///   sum_{i=0}^{k} (-1)^i C(k,i) f(t + (k/2 - i) h) / h^k,   error O(h^2).
Vec<double> central_difference(const std::function<Vec<double>(double)>& f, std::size_t order, double t,
                               double step);

/// Floating-point smoke test: central difference of point_at. The stencil must
/// stay where the denominator is positive.
Vec<double> finite_difference(const RationalBezierCurve<double>& curve, std::size_t order, double t,
                              const OracleConfig& config = {});

double default_fd_step(const RationalBezierCurve<double>& curve);

}  // namespace rbez::oracle

#endif  // RBEZ_ORACLE_HPP
