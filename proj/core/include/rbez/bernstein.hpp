#ifndef RBEZ_BERNSTEIN_HPP
#define RBEZ_BERNSTEIN_HPP

#include <cstddef>
#include <memory>
#include <mutex>
#include <span>
#include <utility>
#include <vector>

#include "rbez/numeric.hpp"

namespace rbez {

// ---------------------------------------------------------------------------
// Coefficient plumbing: a Bernstein coefficient is either a scalar or a Vec.

template <class C>
struct CoeffTraits;

template <Scalar S>
struct CoeffTraits<S> {
  using scalar_type = S;
  static std::size_t dim(const S&) { return 1; }
  static const S& component(const S& c, std::size_t) { return c; }
  static S assemble(std::vector<S> parts) { return std::move(parts.front()); }
  static S zero_like(const S&) { return from_int<S>(0); }
};

template <Scalar S>
struct CoeffTraits<Vec<S>> {
  using scalar_type = S;
  static std::size_t dim(const Vec<S>& c) { return c.dim(); }
  static const S& component(const Vec<S>& c, std::size_t i) { return c[i]; }
  static Vec<S> assemble(std::vector<S> parts) { return Vec<S>(std::move(parts)); }
  static Vec<S> zero_like(const Vec<S>& c) { return Vec<S>::zero(c.dim()); }
};

template <class C>
using ScalarOf = typename CoeffTraits<C>::scalar_type;

template <class C>
concept Coefficient = requires { typename CoeffTraits<C>::scalar_type; };

// ---------------------------------------------------------------------------
// Binomial rows, cached per degree. Exact big integers for rationals, long
// double for doubles. Thread-safe; rows are immutable once published.

template <Scalar S>
class BinomialCache {
 public:
  using Value = BinomialOf<S>;
  using Row = std::vector<Value>;

  static std::shared_ptr<const Row> row(std::size_t n) {
    static std::mutex mutex;
    static std::vector<std::shared_ptr<const Row>> rows;
    std::lock_guard lock(mutex);
    if (rows.size() <= n) rows.resize(n + 1);
    if (!rows[n]) rows[n] = std::make_shared<const Row>(compute(n));
    return rows[n];
  }

  static Value choose(std::size_t n, std::size_t k) {
    if (k > n) return Value(0);
    return (*row(n))[k];
  }

 private:
  // C(n,i+1) = C(n,i) (n-i) / (i+1), filled to the middle and mirrored.
  static Row compute(std::size_t n) {
    Row r(n + 1);
    r[0] = Value(1);
    for (std::size_t i = 0; 2 * i < n; ++i) {
      if constexpr (std::same_as<Value, BigInt>) {
        BigInt next = r[i] * static_cast<unsigned long>(n - i);
        mpz_divexact_ui(next.get_mpz_t(), next.get_mpz_t(), static_cast<unsigned long>(i + 1));
        r[i + 1] = next;
      } else {
        r[i + 1] = r[i] * static_cast<Value>(n - i) / static_cast<Value>(i + 1);
      }
    }
    for (std::size_t i = 0; i <= n; ++i) {
      if (2 * i > n) r[i] = r[n - i];
    }
    return r;
  }
};

template <Scalar S>
S binomial(std::size_t n, std::size_t k) {
  const auto value = BinomialCache<S>::choose(n, k);
  if constexpr (std::same_as<S, double>) {
    return static_cast<double>(value);
  } else {
    return Rational(value);
  }
}

// ---------------------------------------------------------------------------

/// Polynomial sum_i coeffs[i] B_i^n(t) with explicit degree n = coeffs.size()-1.
template <Coefficient C>
class BernsteinPoly {
 public:
  using coeff_type = C;
  using scalar_type = ScalarOf<C>;

  explicit BernsteinPoly(std::vector<C> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw DomainError("Bernstein polynomial needs at least one coefficient");
  }

  std::size_t degree() const { return coeffs_.size() - 1; }
  std::span<const C> coeffs() const { return coeffs_; }
  const C& operator[](std::size_t i) const { return coeffs_[i]; }

  friend bool operator==(const BernsteinPoly& a, const BernsteinPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  std::vector<C> coeffs_;
};

namespace detail {

// Accumulator for the scaled-basis convolution: exact for rationals, extended
// precision for doubles so scaled coefficients C(n,i) p_i stay finite.
template <Scalar S>
using Accum = std::conditional_t<std::same_as<S, double>, long double, Rational>;

template <Scalar S>
Accum<S> to_accum(const S& x) {
  if constexpr (std::same_as<S, double>) {
    return static_cast<long double>(x);
  } else {
    return x;
  }
}

template <Scalar S>
S from_accum(const Accum<S>& x) {
  if constexpr (std::same_as<S, double>) {
    return static_cast<double>(x);
  } else {
    return x;
  }
}

template <Scalar S>
std::vector<Accum<S>> scaled(std::span<const S> c) {
  const std::size_t n = c.size() - 1;
  const auto row = BinomialCache<S>::row(n);
  std::vector<Accum<S>> out(c.size());
  for (std::size_t i = 0; i <= n; ++i) out[i] = to_accum(c[i]) * (*row)[i];
  return out;
}

/// Bernstein product of two scalar coefficient sequences of degrees a and b:
///   c_k = sum_i C(a,i) C(b,k-i) / C(a+b,k) * p_i q_{k-i}.
/// Computed as the convolution of the binomially scaled sequences.
template <Scalar S>
std::vector<S> product_scalar(std::span<const S> p, std::span<const S> q) {
  const std::size_t a = p.size() - 1;
  const std::size_t b = q.size() - 1;
  const auto ps = scaled<S>(p);
  const auto qs = scaled<S>(q);
  const auto row = BinomialCache<S>::row(a + b);
  std::vector<S> out(a + b + 1);
  Accum<S> acc;
  for (std::size_t k = 0; k <= a + b; ++k) {
    const std::size_t lo = k > b ? k - b : 0;
    const std::size_t hi = std::min(a, k);
    acc = 0;
    for (std::size_t i = lo; i <= hi; ++i) acc += ps[i] * qs[k - i];
    acc /= (*row)[k];
    out[k] = from_accum<S>(acc);
  }
  return out;
}

template <class C>
std::vector<ScalarOf<C>> component_series(std::span<const C> coeffs, std::size_t comp) {
  std::vector<ScalarOf<C>> out;
  out.reserve(coeffs.size());
  for (const C& c : coeffs) out.push_back(CoeffTraits<C>::component(c, comp));
  return out;
}

template <class C>
std::vector<C> assemble_series(std::vector<std::vector<ScalarOf<C>>> per_component) {
  const std::size_t len = per_component.front().size();
  std::vector<C> out;
  out.reserve(len);
  for (std::size_t i = 0; i < len; ++i) {
    std::vector<ScalarOf<C>> parts;
    parts.reserve(per_component.size());
    for (auto& series : per_component) parts.push_back(std::move(series[i]));
    out.push_back(CoeffTraits<C>::assemble(std::move(parts)));
  }
  return out;
}

}  // namespace detail

/// Value of the polynomial at t. De Casteljau for doubles; for rationals the
/// direct basis sum, which is exact and linear in the degree.
template <Coefficient C>
C eval(const BernsteinPoly<C>& poly, const ScalarOf<C>& t) {
  using S = ScalarOf<C>;
  const std::size_t n = poly.degree();
  if constexpr (std::same_as<S, double>) {
    std::vector<C> work(poly.coeffs().begin(), poly.coeffs().end());
    const double s = 1.0 - t;
    for (std::size_t r = 1; r <= n; ++r) {
      for (std::size_t i = 0; i + r <= n; ++i) work[i] = work[i] * s + work[i + 1] * t;
    }
    return work[0];
  } else {
    const Rational one_minus_t = 1 - t;
    std::vector<Rational> t_pow(n + 1), s_pow(n + 1);
    t_pow[0] = 1;
    s_pow[0] = 1;
    for (std::size_t i = 1; i <= n; ++i) {
      t_pow[i] = t_pow[i - 1] * t;
      s_pow[i] = s_pow[i - 1] * one_minus_t;
    }
    const auto row = BinomialCache<Rational>::row(n);
    C acc = CoeffTraits<C>::zero_like(poly[0]);
    for (std::size_t i = 0; i <= n; ++i) {
      const Rational basis = Rational((*row)[i]) * t_pow[i] * s_pow[n - i];
      if (!is_zero(basis)) acc = acc + poly[i] * basis;
    }
    return acc;
  }
}

/// Entry j is the k-th forward difference of the coefficients starting at j.
template <Coefficient C>
std::vector<C> forward_difference(const BernsteinPoly<C>& poly, std::size_t order) {
  if (order > poly.degree()) throw DomainError("difference order exceeds degree");
  std::vector<C> work(poly.coeffs().begin(), poly.coeffs().end());
  for (std::size_t r = 0; r < order; ++r) {
    for (std::size_t j = 0; j + 1 < work.size(); ++j) work[j] = work[j + 1] - work[j];
    work.pop_back();
  }
  return work;
}

/// k-th derivative as a B-form of degree n-k. For k > n the result is the
/// zero polynomial of degree 0.
template <Coefficient C>
BernsteinPoly<C> derivative(const BernsteinPoly<C>& poly, std::size_t order) {
  using S = ScalarOf<C>;
  const std::size_t n = poly.degree();
  if (order == 0) return poly;
  if (order > n) return BernsteinPoly<C>({CoeffTraits<C>::zero_like(poly[0])});
  S falling = from_int<S>(1);  // n! / (n-k)!
  for (std::size_t i = 0; i < order; ++i) falling = falling * from_int<S>(static_cast<std::int64_t>(n - i));
  std::vector<C> diffs = forward_difference(poly, order);
  for (C& c : diffs) c = c * falling;
  return BernsteinPoly<C>(std::move(diffs));
}

/// Product of a scalar- or vector-valued polynomial with a scalar polynomial;
/// the result has degree deg(p) + deg(q).
template <Coefficient C>
BernsteinPoly<C> product(const BernsteinPoly<C>& p, const BernsteinPoly<ScalarOf<C>>& q) {
  using S = ScalarOf<C>;
  const std::size_t dim = CoeffTraits<C>::dim(p[0]);
  std::vector<std::vector<S>> parts;
  parts.reserve(dim);
  for (std::size_t comp = 0; comp < dim; ++comp) {
    const auto series = detail::component_series<C>(p.coeffs(), comp);
    parts.push_back(detail::product_scalar<S>(series, q.coeffs()));
  }
  return BernsteinPoly<C>(detail::assemble_series<C>(std::move(parts)));
}

/// The degree-e polynomial whose coefficients are all one (the constant 1).
template <Scalar S>
BernsteinPoly<S> unit_poly(std::size_t degree) {
  return BernsteinPoly<S>(std::vector<S>(degree + 1, from_int<S>(1)));
}

/// Degree elevation by e steps, as the product with the degree-e unit polynomial.
template <Coefficient C>
BernsteinPoly<C> elevate(const BernsteinPoly<C>& poly, std::size_t steps) {
  if (steps == 0) return poly;
  return product(poly, unit_poly<ScalarOf<C>>(steps));
}

/// Single-step elevation by the recurrence
///   c_i = i/(n+1) p_{i-1} + (1 - i/(n+1)) p_i.
template <Coefficient C>
BernsteinPoly<C> elevate_once(const BernsteinPoly<C>& poly) {
  using S = ScalarOf<C>;
  const std::size_t n = poly.degree();
  const S denom = from_int<S>(static_cast<std::int64_t>(n + 1));
  std::vector<C> out;
  out.reserve(n + 2);
  out.push_back(poly[0]);
  for (std::size_t i = 1; i <= n; ++i) {
    const S a = from_int<S>(static_cast<std::int64_t>(i)) / denom;
    out.push_back(poly[i - 1] * a + poly[i] * (from_int<S>(1) - a));
  }
  out.push_back(poly[n]);
  return BernsteinPoly<C>(std::move(out));
}

/// Adjacent differences of the coefficients as a B-form of degree n-1
/// (the hodograph without the factor n). Degree-0 input yields zero.
template <Coefficient C>
BernsteinPoly<C> difference_poly(const BernsteinPoly<C>& poly) {
  if (poly.degree() == 0) return BernsteinPoly<C>({CoeffTraits<C>::zero_like(poly[0])});
  return BernsteinPoly<C>(forward_difference(poly, 1));
}

template <Coefficient C>
BernsteinPoly<C> reversed(const BernsteinPoly<C>& poly) {
  return BernsteinPoly<C>(std::vector<C>(poly.coeffs().rbegin(), poly.coeffs().rend()));
}

template <Coefficient C>
BernsteinPoly<C> operator-(const BernsteinPoly<C>& a, const BernsteinPoly<C>& b) {
  if (a.degree() != b.degree()) throw DomainError("Bernstein degree mismatch");
  std::vector<C> out;
  out.reserve(a.degree() + 1);
  for (std::size_t i = 0; i <= a.degree(); ++i) out.push_back(a[i] - b[i]);
  return BernsteinPoly<C>(std::move(out));
}

template <Coefficient C>
BernsteinPoly<C> operator+(const BernsteinPoly<C>& a, const BernsteinPoly<C>& b) {
  if (a.degree() != b.degree()) throw DomainError("Bernstein degree mismatch");
  std::vector<C> out;
  out.reserve(a.degree() + 1);
  for (std::size_t i = 0; i <= a.degree(); ++i) out.push_back(a[i] + b[i]);
  return BernsteinPoly<C>(std::move(out));
}

}  // namespace rbez

#endif  // RBEZ_BERNSTEIN_HPP
