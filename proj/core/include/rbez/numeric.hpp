#ifndef RBEZ_NUMERIC_HPP
#define RBEZ_NUMERIC_HPP

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <concepts>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

#include "rbez/error.hpp"

namespace rbez {

/// Exact rational scalar: arbitrary-precision numerator over denominator,
/// always kept in canonical (lowest terms, positive denominator) form.
using Rational = mpq_class;
using BigInt = mpz_class;

/// The two scalar instantiations every algorithm in this library is generic over.
template <class S>
concept Scalar = std::same_as<S, double> || std::same_as<S, Rational>;

template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<double> {
  static constexpr bool exact = false;
  /// Binomial coefficients are kept in extended precision so that rows up to
  /// degree ~4000 stay finite (C(2560,1280) is ~1e769).
  using Binomial = long double;
  static constexpr const char* name = "double";
};

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;
  using Binomial = BigInt;
  static constexpr const char* name = "rational";
};

template <Scalar S>
using BinomialOf = typename ScalarTraits<S>::Binomial;

template <Scalar S>
S from_int(std::int64_t n) {
  if constexpr (std::same_as<S, double>) {
    return static_cast<double>(n);
  } else {
    return Rational(BigInt(static_cast<long>(n)));
  }
}

template <Scalar S>
S from_ratio(std::int64_t num, std::int64_t den) {
  if (den == 0) throw DomainError("zero denominator");
  if constexpr (std::same_as<S, double>) {
    return static_cast<double>(num) / static_cast<double>(den);
  } else {
    Rational q(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den)));
    q.canonicalize();
    return q;
  }
}

template <Scalar S>
S from_big(const BigInt& n) {
  if constexpr (std::same_as<S, double>) {
    return n.get_d();
  } else {
    return Rational(n);
  }
}

inline double to_double(double x) { return x; }
double to_double(const Rational& x);

inline bool is_zero(double x) { return x == 0.0; }
inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

inline double abs_value(double x) { return std::fabs(x); }
inline Rational abs_value(const Rational& x) { return abs(x); }

inline int sign(double x) { return (x > 0) - (x < 0); }
inline int sign(const Rational& x) { return sgn(x); }

/// x^e for a nonnegative integer exponent, by repeated squaring.
template <Scalar S>
S power(const S& x, std::uint64_t e) {
  S result = from_int<S>(1);
  S base = x;
  while (e != 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e != 0) base = base * base;
  }
  return result;
}

/// "p/q" in lowest terms (or "p" for integers) for rationals; 17 significant
/// digits for doubles.
std::string format_scalar(const Rational& x);
std::string format_scalar(double x);

/// Parses "3", "-1.25", "2.5e-3", "1/3", "-4/6". Throws ParseError.
template <Scalar S>
S parse_scalar(std::string_view text);

template <>
Rational parse_scalar<Rational>(std::string_view text);
template <>
double parse_scalar<double>(std::string_view text);

template <Scalar S>
S convert_scalar(const Rational& x) {
  if constexpr (std::same_as<S, double>) {
    return to_double(x);
  } else {
    return x;
  }
}

// ---------------------------------------------------------------------------

/// Point / vector in R^d with scalar components. Operations are componentwise
/// and never change the length.
template <Scalar S>
class Vec {
 public:
  Vec() = default;
  explicit Vec(std::vector<S> components) : components_(std::move(components)) {}
  Vec(std::initializer_list<S> components) : components_(components) {}

  static Vec zero(std::size_t dim) { return Vec(std::vector<S>(dim, from_int<S>(0))); }

  std::size_t dim() const { return components_.size(); }
  const S& operator[](std::size_t i) const { return components_[i]; }
  std::span<const S> components() const { return components_; }

  bool is_zero() const {
    return std::all_of(components_.begin(), components_.end(),
                       [](const S& c) { return rbez::is_zero(c); });
  }

  friend Vec operator+(const Vec& a, const Vec& b) {
    check_same_dim(a, b);
    std::vector<S> out(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) out[i] = a.components_[i] + b.components_[i];
    return Vec(std::move(out));
  }
  friend Vec operator-(const Vec& a, const Vec& b) {
    check_same_dim(a, b);
    std::vector<S> out(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) out[i] = a.components_[i] - b.components_[i];
    return Vec(std::move(out));
  }
  friend Vec operator-(const Vec& a) {
    std::vector<S> out(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) out[i] = -a.components_[i];
    return Vec(std::move(out));
  }
  friend Vec operator*(const Vec& a, const S& s) {
    std::vector<S> out(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) out[i] = a.components_[i] * s;
    return Vec(std::move(out));
  }
  friend Vec operator*(const S& s, const Vec& a) { return a * s; }
  friend Vec operator/(const Vec& a, const S& s) {
    if (rbez::is_zero(s)) throw DomainError("division by zero");
    std::vector<S> out(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) out[i] = a.components_[i] / s;
    return Vec(std::move(out));
  }
  friend bool operator==(const Vec& a, const Vec& b) { return a.components_ == b.components_; }

 private:
  static void check_same_dim(const Vec& a, const Vec& b) {
    if (a.dim() != b.dim()) throw DomainError("vector dimension mismatch");
  }

  std::vector<S> components_;
};

template <Scalar S>
std::string format_vec(const Vec<S>& v, std::string_view sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (i != 0) out += sep;
    out += format_scalar(v[i]);
  }
  return out;
}

template <Scalar S>
Vec<double> to_double(const Vec<S>& v) {
  std::vector<double> out;
  out.reserve(v.dim());
  for (const S& c : v.components()) out.push_back(to_double(c));
  return Vec<double>(std::move(out));
}

template <Scalar S>
Vec<S> convert_vec(const Vec<Rational>& v) {
  std::vector<S> out;
  out.reserve(v.dim());
  for (const Rational& c : v.components()) out.push_back(convert_scalar<S>(c));
  return Vec<S>(std::move(out));
}

enum class Norm { L1, L2, LInf };

/// Accepts "1", "2", "inf"/"Inf"/"infinity". Anything else: "unsupported norm".
Norm parse_norm(std::string_view text);
std::string_view norm_name(Norm p);

template <Scalar S>
S squared_l2(const Vec<S>& v) {
  S acc = from_int<S>(0);
  for (const S& c : v.components()) acc += c * c;
  return acc;
}

/// l^p norm. For p=2 under rationals the exact squared norm is computed and
/// the square root is taken in floating point; callers that need an exact
/// comparison should compare squared_l2 instead.
template <Scalar S>
S lp_norm(const Vec<S>& v, Norm p) {
  if (v.dim() == 0) throw DomainError("norm of empty vector");
  switch (p) {
    case Norm::L1: {
      S acc = from_int<S>(0);
      for (const S& c : v.components()) acc += abs_value(c);
      return acc;
    }
    case Norm::LInf: {
      S best = from_int<S>(0);
      for (const S& c : v.components()) {
        S a = abs_value(c);
        if (a > best) best = a;
      }
      return best;
    }
    case Norm::L2: {
      if constexpr (std::same_as<S, double>) {
        // hypot-style scaling keeps large components from overflowing
        double scale = 0.0;
        for (double c : v.components()) scale = std::max(scale, std::fabs(c));
        if (scale == 0.0) return 0.0;
        double acc = 0.0;
        for (double c : v.components()) acc += (c / scale) * (c / scale);
        return scale * std::sqrt(acc);
      } else {
        return Rational(std::sqrt(to_double(squared_l2(v))));
      }
    }
  }
  throw DomainError("unsupported norm");
}

}  // namespace rbez

#endif  // RBEZ_NUMERIC_HPP
