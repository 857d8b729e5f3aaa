#ifndef RBEZ_DERIV_HPP
#define RBEZ_DERIV_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "rbez/bernstein.hpp"
#include "rbez/curve.hpp"
#include "rbez/numeric.hpp"

namespace rbez {

/// Upper limit on 2^k n, the degree of the order-k representation. Table size
/// doubles with every order.
inline constexpr std::uint64_t kDefaultDegreeCap = 65536;

/// 2^k n, or DegreeCapError when it exceeds the cap.
inline std::uint64_t derivative_degree(std::size_t n, std::size_t order, std::uint64_t cap) {
  if (order >= 63 || (static_cast<std::uint64_t>(n) >> (63 - order)) != 0) throw DegreeCapError();
  const std::uint64_t degree = static_cast<std::uint64_t>(n) << order;
  if (degree > cap) throw DegreeCapError();
  return degree;
}

/// prod_{j=0}^{k-1} 2^j n = 2^{k(k-1)/2} n^k; 1 for k = 0.
template <Scalar S>
S derivative_factor(std::size_t n, std::size_t order) {
  const std::uint64_t two_exp = static_cast<std::uint64_t>(order) * (order == 0 ? 0 : order - 1) / 2;
  return power(from_int<S>(2), two_exp) * power(from_int<S>(static_cast<std::int64_t>(n)), order);
}

/// One level j of the recursion: the weight table (B-form of w(t)^{2^j}) and
/// the numerator table, both of degree 2^j n.
template <Scalar S>
struct DerivativeLevel {
  BernsteinPoly<S> weights;
  BernsteinPoly<Vec<S>> numerator;
};

/// Cross-difference polynomial of degree 2^{j+1} n - 1 built from level j:
///   P = diff(numerator) * weights - diff(weights) * numerator
/// where diff is the coefficient difference sequence (degree 2^j n - 1).
template <Scalar S>
BernsteinPoly<Vec<S>> cross_difference(const DerivativeLevel<S>& level) {
  return product(difference_poly(level.numerator), level.weights) -
         product(level.numerator, difference_poly(level.weights));
}

/// Level j+1 from level j: the weight table is squared and the numerator is
/// the cross difference elevated by one degree.
template <Scalar S>
DerivativeLevel<S> next_level(const DerivativeLevel<S>& level) {
  return DerivativeLevel<S>{product(level.weights, level.weights), elevate_once(cross_difference(level))};
}

namespace detail {

/// Exact levels start_order+1 .. start_order+steps computed from `start` by the
/// integer scaled-basis engine. Equal, coefficient for coefficient, to
/// repeated next_level.
std::vector<DerivativeLevel<Rational>> exact_levels(const DerivativeLevel<Rational>& start,
                                                    std::size_t start_order, std::size_t curve_degree,
                                                    std::size_t steps);

}  // namespace detail

/// Levels 0..order of the degree-doubling recursion for one curve. Immutable;
/// extending to a higher order shares the levels already computed.
template <Scalar S>
class DerivativeTables {
 public:
  static DerivativeTables build(const RationalBezierCurve<S>& curve, std::size_t order,
                                std::uint64_t cap = kDefaultDegreeCap) {
    DerivativeTables tables(curve, cap);
    tables.levels_.push_back(std::make_shared<const DerivativeLevel<S>>(
        DerivativeLevel<S>{denominator_poly(curve), numerator_poly(curve)}));
    return tables.extended(order);
  }

  DerivativeTables extended(std::size_t order) const {
    derivative_degree(curve_.degree(), order, cap_);
    DerivativeTables out = *this;
    if (out.levels_.size() > order) return out;
    if constexpr (std::same_as<S, Rational>) {
      const std::size_t have = out.order();
      for (auto& lvl : detail::exact_levels(*out.levels_.back(), have, curve_.degree(), order - have)) {
        out.levels_.push_back(std::make_shared<const DerivativeLevel<S>>(std::move(lvl)));
      }
    } else {
      while (out.levels_.size() <= order) {
        out.levels_.push_back(
            std::make_shared<const DerivativeLevel<S>>(next_level(*out.levels_.back())));
      }
    }
    return out;
  }

  std::size_t order() const { return levels_.size() - 1; }
  const DerivativeLevel<S>& level(std::size_t j) const {
    if (j >= levels_.size()) throw DomainError("derivative tables not built to the requested order");
    return *levels_[j];
  }
  const RationalBezierCurve<S>& curve() const { return curve_; }
  std::uint64_t degree_cap() const { return cap_; }

  /// Test hook: a copy whose weight table at `level` has `delta` added to one
  /// coefficient. Used as a negative control for the verification suite.
  DerivativeTables with_weight_perturbed(std::size_t level, std::size_t index, const S& delta) const {
    const DerivativeLevel<S>& src = this->level(level);
    std::vector<S> w(src.weights.coeffs().begin(), src.weights.coeffs().end());
    if (index >= w.size()) throw DomainError("weight index out of range");
    w[index] = w[index] + delta;
    DerivativeTables out = *this;
    out.levels_[level] = std::make_shared<const DerivativeLevel<S>>(
        DerivativeLevel<S>{BernsteinPoly<S>(std::move(w)), src.numerator});
    return out;
  }

 private:
  DerivativeTables(const RationalBezierCurve<S>& curve, std::uint64_t cap) : curve_(curve), cap_(cap) {}

  RationalBezierCurve<S> curve_;
  std::uint64_t cap_;
  std::vector<std::shared_ptr<const DerivativeLevel<S>>> levels_;
};

/// c^{(k)}(t) = factor * numerator(t) / denominator(t), both of degree 2^k n.
template <Scalar S>
struct DerivativeRep {
  std::size_t order;
  S factor;
  BernsteinPoly<Vec<S>> numerator;
  BernsteinPoly<S> denominator;
};

template <Scalar S>
DerivativeRep<S> derivative_rep(const DerivativeTables<S>& tables, std::size_t order) {
  const DerivativeLevel<S>& lvl = tables.level(order);
  return DerivativeRep<S>{order, derivative_factor<S>(tables.curve().degree(), order), lvl.numerator,
                          lvl.weights};
}

template <Scalar S>
Vec<S> evaluate(const DerivativeRep<S>& rep, const S& t) {
  const S denom = eval(rep.denominator, t);
  if (is_zero(denom)) throw PoleError();
  return eval(rep.numerator, t) * (rep.factor / denom);
}

template <Scalar S>
Vec<S> derivative_at(const DerivativeTables<S>& tables, std::size_t order, const S& t) {
  return evaluate(derivative_rep(tables, order), t);
}

template <Scalar S>
Vec<S> derivative_at(const RationalBezierCurve<S>& curve, std::size_t order, const S& t,
                     std::uint64_t cap = kDefaultDegreeCap) {
  return derivative_at(DerivativeTables<S>::build(curve, order, cap), order, t);
}

// ---------------------------------------------------------------------------
// Endpoint derivatives.

enum class End { Start, Finish };

namespace detail {

template <Scalar S>
S parity_sign(std::size_t order) {
  return from_int<S>(order % 2 == 0 ? 1 : -1);
}

}  // namespace detail

/// c^{(k)}(0) = factor / w_0^{2^k} * numerator_0, read off level k. The t = 1
/// value uses the reversed curve's tables: c^{(k)}(1) = (-1)^k times the
/// reversed curve's start value.
template <Scalar S>
Vec<S> endpoint_derivative(const DerivativeTables<S>& forward, const DerivativeTables<S>& reverse,
                           std::size_t order, End end) {
  const DerivativeTables<S>& tables = end == End::Start ? forward : reverse;
  const std::size_t n = tables.curve().degree();
  const S w0_pow = power(tables.curve().weights()[0], std::uint64_t{1} << order);
  Vec<S> value = tables.level(order).numerator[0] * (derivative_factor<S>(n, order) / w0_pow);
  return end == End::Start ? value : value * detail::parity_sign<S>(order);
}

template <Scalar S>
Vec<S> endpoint_derivative(const RationalBezierCurve<S>& curve, std::size_t order, End end,
                           std::uint64_t cap = kDefaultDegreeCap) {
  const RationalBezierCurve<S> oriented = end == End::Start ? curve : curve.reversed();
  const auto tables = DerivativeTables<S>::build(oriented, order, cap);
  return endpoint_derivative(tables, tables, order, End::Start) *
         (end == End::Start ? from_int<S>(1) : detail::parity_sign<S>(order));
}

/// Endpoint derivative from level k-1 only, via
///   numerator^{[k]}_0 = numerator^{[k-1]}_1 w^{[k-1]}_0 - w^{[k-1]}_1 numerator^{[k-1]}_0,
/// so c^{(k)}(0) = factor / w_0^{2^{k-1}} (numerator^{[k-1]}_1 - (w^{[k-1]}_1 / w^{[k-1]}_0) numerator^{[k-1]}_0).
///
/// The commonly printed form of this shortcut uses the level-0 ratio w_1/w_0
/// and an unelevated second term; those coincide with the above only for k = 1.
template <Scalar S>
Vec<S> endpoint_derivative_reduced(const DerivativeTables<S>& tables, std::size_t order) {
  if (order == 0) throw DomainError("requires k >= 1");
  const std::size_t n = tables.curve().degree();
  const DerivativeLevel<S>& prev = tables.level(order - 1);
  const S w0_pow = power(tables.curve().weights()[0], std::uint64_t{1} << (order - 1));
  const S ratio = prev.weights[1] / prev.weights[0];
  const Vec<S> inner = prev.numerator[1] - prev.numerator[0] * ratio;
  return inner * (derivative_factor<S>(n, order) / w0_pow);
}

template <Scalar S>
Vec<S> endpoint_derivative_reduced(const RationalBezierCurve<S>& curve, std::size_t order, End end,
                                   std::uint64_t cap = kDefaultDegreeCap) {
  if (order == 0) throw DomainError("requires k >= 1");
  if (end == End::Start) {
    return endpoint_derivative_reduced(DerivativeTables<S>::build(curve, order - 1, cap), order);
  }
  derivative_degree(curve.degree(), order, cap);
  const auto tables = DerivativeTables<S>::build(curve.reversed(), order - 1, cap);
  return endpoint_derivative_reduced(tables, order) * detail::parity_sign<S>(order);
}

// ---------------------------------------------------------------------------
// Derivative bound.

/// sup_{t in [0,1]} ||c^{(k)}(t)||_p <= max_i factor ||Q_i||_p / v_i, where Q and
/// v are the level-k numerator and weight tables elevated by e degrees. The
/// elevation normalizer is common to Q_i and v_i and cancels in the ratio.
///
/// For p = 2 under rationals the maximum is located exactly on squared ratios
/// and only the final square root is taken in floating point.
template <Scalar S>
S derivative_bound(const DerivativeTables<S>& tables, std::size_t order, std::size_t elevation, Norm p) {
  const std::size_t n = tables.curve().degree();
  const std::uint64_t degree = derivative_degree(n, order, tables.degree_cap());
  if (degree + elevation > tables.degree_cap()) throw DegreeCapError();
  const DerivativeLevel<S>& lvl = tables.level(order);
  const auto num = elevate(lvl.numerator, elevation);
  const auto den = elevate(lvl.weights, elevation);
  const S factor = derivative_factor<S>(n, order);

  S best = from_int<S>(0);
  for (std::size_t i = 0; i <= num.degree(); ++i) {
    if (!(den[i] > from_int<S>(0))) throw DomainError("nonpositive elevated weight");
    S ratio;
    if constexpr (std::same_as<S, Rational>) {
      if (p == Norm::L2) {
        ratio = squared_l2(num[i]) / (den[i] * den[i]);
      } else {
        ratio = lp_norm(num[i], p) / den[i];
      }
    } else {
      ratio = lp_norm(num[i], p) / den[i];
    }
    if (ratio > best) best = ratio;
  }
  if constexpr (std::same_as<S, Rational>) {
    if (p == Norm::L2) return Rational(std::sqrt(to_double(best))) * factor;
  }
  return best * factor;
}

template <Scalar S>
S derivative_bound(const RationalBezierCurve<S>& curve, std::size_t order, std::size_t elevation, Norm p,
                   std::uint64_t cap = kDefaultDegreeCap) {
  return derivative_bound(DerivativeTables<S>::build(curve, order, cap), order, elevation, p);
}

/// Exact squared l2 bound (rationals only): max_i factor^2 ||Q_i||^2 / v_i^2.
inline Rational derivative_bound_squared_l2(const DerivativeTables<Rational>& tables, std::size_t order,
                                            std::size_t elevation) {
  const std::size_t n = tables.curve().degree();
  const std::uint64_t degree = derivative_degree(n, order, tables.degree_cap());
  if (degree + elevation > tables.degree_cap()) throw DegreeCapError();
  const auto num = elevate(tables.level(order).numerator, elevation);
  const auto den = elevate(tables.level(order).weights, elevation);
  Rational best = 0;
  for (std::size_t i = 0; i <= num.degree(); ++i) {
    Rational ratio = squared_l2(num[i]) / (den[i] * den[i]);
    if (ratio > best) best = ratio;
  }
  const Rational factor = derivative_factor<Rational>(n, order);
  return best * factor * factor;
}

// ---------------------------------------------------------------------------
// Structural checks on the numerator tables.

struct CoefficientCheck {
  std::size_t level;
  std::size_t index;
  bool pass;
  double deviation;
};

struct CheckReport {
  bool passed = true;
  double max_deviation = 0.0;
  std::vector<CoefficientCheck> entries;

  void record(std::size_t level, std::size_t index, bool ok, double deviation) {
    entries.push_back({level, index, ok, deviation});
    passed = passed && ok;
    if (deviation > max_deviation) max_deviation = deviation;
  }
};

namespace detail {

template <Scalar S>
double max_abs(const Vec<S>& v) {
  double m = 0.0;
  for (const S& c : v.components()) m = std::max(m, std::fabs(to_double(c)));
  return m;
}

/// Zero test with a relative tolerance for doubles, exact for rationals.
template <Scalar S>
bool negligible(const Vec<S>& v, double scale) {
  if constexpr (std::same_as<S, Rational>) {
    return v.is_zero();
  } else {
    return max_abs(v) <= 1e-9 * std::max(1.0, scale);
  }
}

template <Scalar S>
double table_scale(const DerivativeLevel<S>& lvl) {
  double m = 0.0;
  for (const auto& c : lvl.numerator.coeffs()) m = std::max(m, max_abs(c));
  return m;
}

}  // namespace detail

/// Rebuilds the tables with every control point replaced by one common point
/// (default: the first control point) and checks that every numerator
/// coefficient on levels 1..k vanishes: each is a combination of the control
/// points whose coefficients sum to zero.
template <Scalar S>
CheckReport check_zero_sum(const DerivativeTables<S>& tables,
                           const std::optional<std::type_identity_t<Vec<S>>>& common = {}) {
  if (tables.order() == 0) throw DomainError("requires k >= 1");
  const auto& curve = tables.curve();
  const Vec<S> point = common.value_or(curve.points()[0]);
  const auto flat = curve.with_points(std::vector<Vec<S>>(curve.degree() + 1, point));
  const auto rebuilt = DerivativeTables<S>::build(flat, tables.order(), tables.degree_cap());
  CheckReport report;
  for (std::size_t j = 1; j <= rebuilt.order(); ++j) {
    const auto& lvl = rebuilt.level(j);
    double scale = 0.0;
    for (const S& w : lvl.weights.coeffs()) scale = std::max(scale, std::fabs(to_double(w)));
    scale *= std::max(1.0, detail::max_abs(point));
    for (std::size_t i = 0; i <= lvl.numerator.degree(); ++i) {
      const auto& c = lvl.numerator[i];
      report.record(j, i, detail::negligible(c, scale), detail::max_abs(c));
    }
  }
  return report;
}

/// numerator^{[j]}_i(w, r) = (-1)^j numerator^{[j]}_{2^j n - i}(reversed w, reversed r)
/// for every level j = 1..k.
template <Scalar S>
CheckReport check_symmetry(const RationalBezierCurve<S>& curve, std::size_t order,
                           std::uint64_t cap = kDefaultDegreeCap) {
  if (order == 0) throw DomainError("requires k >= 1");
  const auto forward = DerivativeTables<S>::build(curve, order, cap);
  const auto reverse = DerivativeTables<S>::build(curve.reversed(), order, cap);
  CheckReport report;
  for (std::size_t j = 1; j <= order; ++j) {
    const auto& a = forward.level(j).numerator;
    const auto& b = reverse.level(j).numerator;
    const S sign = detail::parity_sign<S>(j);
    const std::size_t top = a.degree();
    const double scale = detail::table_scale(forward.level(j));
    for (std::size_t i = 0; i <= top; ++i) {
      const Vec<S> diff = a[i] - b[top - i] * sign;
      report.record(j, i, detail::negligible(diff, scale), detail::max_abs(diff));
    }
  }
  return report;
}

}  // namespace rbez

#endif  // RBEZ_DERIV_HPP
