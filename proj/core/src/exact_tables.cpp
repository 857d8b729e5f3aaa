// Integer engine for the exact derivative tables.
//
// A degree-N polynomial sum a_i B_i^N(t) is held in the scaled basis
// t^i (1-t)^{N-i} with coefficients A_i = C(N,i) a_i. In that basis
//   product     is plain convolution,
//   d/dt        maps A to (i+1) A_{i+1} - (N-i) A_i   (degree N-1),
//   elevation   by one degree maps A to A_{i-1} + A_i,
// so after clearing denominators the whole recursion runs on big integers
// without a single gcd. Results are converted back to Bernstein coefficients
// once per level.

#include <gmp.h>

#include "rbez/deriv.hpp"

namespace rbez::detail {

namespace {

using IntSeq = std::vector<BigInt>;

IntSeq convolve(const IntSeq& a, const IntSeq& b) {
  IntSeq out(a.size() + b.size() - 1);
  for (auto& v : out) v = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  return out;
}

IntSeq differentiate(const IntSeq& a) {
  const std::size_t n = a.size() - 1;
  IntSeq out(n);
  BigInt tmp;
  for (std::size_t i = 0; i < n; ++i) {
    mpz_mul_ui(out[i].get_mpz_t(), a[i + 1].get_mpz_t(), static_cast<unsigned long>(i + 1));
    mpz_mul_ui(tmp.get_mpz_t(), a[i].get_mpz_t(), static_cast<unsigned long>(n - i));
    out[i] -= tmp;
  }
  return out;
}

IntSeq elevate_by_one(const IntSeq& a) {
  IntSeq out(a.size() + 1);
  out.front() = a.front();
  out.back() = a.back();
  for (std::size_t i = 1; i < a.size(); ++i) out[i] = a[i - 1] + a[i];
  return out;
}

BigInt lcm_of_denominators(std::span<const Rational> values) {
  BigInt l = 1;
  for (const Rational& v : values) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  return l;
}

/// A_i = C(N,i) * a_i * scale, which must be an integer.
IntSeq to_scaled(std::span<const Rational> coeffs, const BigInt& scale) {
  const auto row = BinomialCache<Rational>::row(coeffs.size() - 1);
  IntSeq out(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    Rational v = coeffs[i] * scale;
    out[i] = v.get_num() * (*row)[i];  // denominator is 1 by construction of scale
  }
  return out;
}

/// a_i = A_i * multiplier / C(N,i).
std::vector<Rational> from_scaled(const IntSeq& a, const Rational& multiplier) {
  const auto row = BinomialCache<Rational>::row(a.size() - 1);
  std::vector<Rational> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    Rational v(a[i], (*row)[i]);
    v.canonicalize();
    out[i] = v * multiplier;
  }
  return out;
}

}  // namespace

std::vector<DerivativeLevel<Rational>> exact_levels(const DerivativeLevel<Rational>& start,
                                                    std::size_t start_order, std::size_t curve_degree,
                                                    std::size_t steps) {
  std::vector<DerivativeLevel<Rational>> out;
  if (steps == 0) return out;
  out.reserve(steps);

  const std::size_t dim = start.numerator[0].dim();
  const BigInt weight_scale = lcm_of_denominators(start.weights.coeffs());
  IntSeq weights = to_scaled(start.weights.coeffs(), weight_scale);

  // c^{(j)}(t) = sigma * sum_c N_c(t) / W(t), with one integer sequence per
  // coordinate c. The same point scale is used for every coordinate.
  std::vector<Rational> all_components;
  for (const auto& p : start.numerator.coeffs()) {
    for (const Rational& c : p.components()) all_components.push_back(c);
  }
  const BigInt point_scale = lcm_of_denominators(all_components);
  std::vector<IntSeq> numer(dim);
  for (std::size_t c = 0; c < dim; ++c) {
    std::vector<Rational> series;
    for (const auto& p : start.numerator.coeffs()) series.push_back(p[c]);
    numer[c] = to_scaled(series, point_scale);
  }
  const Rational sigma =
      derivative_factor<Rational>(curve_degree, start_order) * Rational(weight_scale) / Rational(point_scale);

  BigInt weight_power = weight_scale;  // weight_scale^{2^{m-j}}
  for (std::size_t step = 1; step <= steps; ++step) {
    const IntSeq dweights = differentiate(weights);
    for (std::size_t c = 0; c < dim; ++c) {
      IntSeq lhs = convolve(differentiate(numer[c]), weights);
      const IntSeq rhs = convolve(numer[c], dweights);
      for (std::size_t i = 0; i < lhs.size(); ++i) lhs[i] -= rhs[i];
      numer[c] = elevate_by_one(lhs);
    }
    weights = convolve(weights, weights);
    weight_power *= weight_power;

    const std::size_t order = start_order + step;
    const Rational inv_weight_power = Rational(BigInt(1), weight_power);
    const Rational numer_multiplier = sigma / derivative_factor<Rational>(curve_degree, order) * inv_weight_power;

    std::vector<std::vector<Rational>> comps(dim);
    for (std::size_t c = 0; c < dim; ++c) comps[c] = from_scaled(numer[c], numer_multiplier);
    std::vector<Vec<Rational>> points(weights.size());
    for (std::size_t i = 0; i < weights.size(); ++i) {
      std::vector<Rational> v(dim);
      for (std::size_t c = 0; c < dim; ++c) v[c] = std::move(comps[c][i]);
      points[i] = Vec<Rational>(std::move(v));
    }
    out.push_back(DerivativeLevel<Rational>{BernsteinPoly<Rational>(from_scaled(weights, inv_weight_power)),
                                            BernsteinPoly<Vec<Rational>>(std::move(points))});
  }
  return out;
}

}  // namespace rbez::detail
