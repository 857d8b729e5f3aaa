#include "commands.hpp"

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include "rbez/curve_io.hpp"
#include "rbez/deriv.hpp"
#include "rbez/random_curve.hpp"
#include "rbez/verify.hpp"

namespace rbez::cli {

namespace {

template <Scalar S>
S parameter(const std::string& text, bool allow_outside) {
  const S t = parse_scalar<S>(text);
  if (!allow_outside && (t < from_int<S>(0) || t > from_int<S>(1))) {
    throw ValidationError("t must lie in [0,1] (use --allow-outside)");
  }
  return t;
}

template <Scalar S>
S sample_parameter(std::size_t i, std::size_t count) {
  if constexpr (std::same_as<S, double>) {
    return static_cast<double>(i) / static_cast<double>(count - 1);
  } else {
    return from_ratio<Rational>(static_cast<std::int64_t>(i), static_cast<std::int64_t>(count - 1));
  }
}

template <Scalar S>
int eval_impl(const EvalArgs& args, std::ostream& out) {
  const auto curve = load_curve_file<S>(args.common.curve_file);
  const S t = parameter<S>(args.t, args.allow_outside);
  out << format_vec(derivative_at(curve, args.order, t, args.common.degree_cap)) << '\n';
  return kOk;
}

template <Scalar S>
bool agrees(const Vec<S>& a, const Vec<S>& b) {
  if constexpr (std::same_as<S, Rational>) {
    return a == b;
  } else {
    for (std::size_t i = 0; i < a.dim(); ++i) {
      if (std::fabs(a[i] - b[i]) > std::max(1e-9 * std::fabs(b[i]), 1e-12)) return false;
    }
    return true;
  }
}

template <Scalar S>
int endpoints_impl(const EndpointsArgs& args, std::ostream& out, std::ostream& diag) {
  const auto curve = load_curve_file<S>(args.common.curve_file);
  const std::uint64_t cap = args.common.degree_cap;
  const auto forward = DerivativeTables<S>::build(curve, args.order, cap);
  const auto reverse = DerivativeTables<S>::build(curve.reversed(), args.order, cap);
  const Vec<S> start = endpoint_derivative(forward, reverse, args.order, End::Start);
  const Vec<S> finish = endpoint_derivative(forward, reverse, args.order, End::Finish);
  out << "start " << format_vec(start) << '\n';
  out << "end " << format_vec(finish) << '\n';
  if (args.order >= 1) {
    const S sign = from_int<S>(args.order % 2 == 0 ? 1 : -1);
    const Vec<S> start_reduced = endpoint_derivative_reduced(forward, args.order);
    const Vec<S> finish_reduced = endpoint_derivative_reduced(reverse, args.order) * sign;
    if (!agrees(start_reduced, start)) {
      diag << "diagnostic: reduced start form " << format_vec(start_reduced) << " differs from "
           << format_vec(start) << '\n';
    }
    if (!agrees(finish_reduced, finish)) {
      diag << "diagnostic: reduced end form " << format_vec(finish_reduced) << " differs from "
           << format_vec(finish) << '\n';
    }
  }
  return kOk;
}

template <Scalar S>
int bound_impl(const BoundArgs& args, std::ostream& out) {
  const Norm p = parse_norm(args.norm);
  const auto curve = load_curve_file<S>(args.common.curve_file);
  const auto tables = DerivativeTables<S>::build(curve, args.order, args.common.degree_cap);
  const S bound = derivative_bound(tables, args.order, args.elevate, p);
  out << format_scalar(bound) << '\n';
  if (!args.compare_samples) return kOk;

  const std::size_t count = *args.compare_samples;
  if (count < 2) throw ValidationError("--compare-samples needs at least 2 samples");
  const auto rep = derivative_rep(tables, args.order);
  bool sound = true;
  if constexpr (std::same_as<S, Rational>) {
    // exact comparison; the 2-norm is compared through squares
    const bool squared = p == Norm::L2;
    const Rational limit = squared ? derivative_bound_squared_l2(tables, args.order, args.elevate) : bound;
    Rational sup = 0;
    for (std::size_t i = 0; i < count; ++i) {
      const Vec<Rational> v = evaluate(rep, sample_parameter<Rational>(i, count));
      const Rational m = squared ? squared_l2(v) : lp_norm(v, p);
      if (m > sup) sup = m;
    }
    sound = sup <= limit;
    out << "sampled_sup " << format_scalar(squared ? std::sqrt(to_double(sup)) : to_double(sup)) << '\n';
  } else {
    double sup = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
      sup = std::max(sup, lp_norm(evaluate(rep, sample_parameter<double>(i, count)), p));
    }
    // sampled values that touch the bound may round one ulp above it
    sound = sup <= bound * (1.0 + 1e-12);
    out << "sampled_sup " << format_scalar(sup) << '\n';
  }
  out << "bound_holds " << (sound ? "yes" : "no") << '\n';
  return sound ? kOk : kVerificationFailed;
}

template <Scalar S>
int sample_impl(const SampleArgs& args, std::ostream& out) {
  if (args.samples < 2) throw ValidationError("--samples must be at least 2");
  const auto curve = load_curve_file<S>(args.common.curve_file);
  const auto tables = DerivativeTables<S>::build(curve, args.order, args.common.degree_cap);
  const auto rep = derivative_rep(tables, args.order);

  std::ostringstream csv;
  csv << 't';
  for (std::size_t c = 0; c < curve.dim(); ++c) csv << ",x" << c;
  csv << '\n';
  for (std::size_t i = 0; i < args.samples; ++i) {
    const S t = sample_parameter<S>(i, args.samples);
    csv << format_scalar(t) << ',' << format_vec(evaluate(rep, t), ",") << '\n';
  }

  if (args.out.empty() || args.out == "-") {
    out << csv.str();
    return kOk;
  }
  std::ofstream file(args.out, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot write '" + args.out + "'");
  file << csv.str();
  file.close();
  if (!file) throw IoError("cannot write '" + args.out + "'");
  return kOk;
}

template <class F>
int dispatch(bool exact, F&& f) {
  return exact ? f(Rational{}) : f(double{});
}

}  // namespace

std::uint64_t degree_cap_from_env() {
  const char* raw = std::getenv("RBEZ_DEGREE_CAP");
  if (raw == nullptr || *raw == '\0') return kDefaultDegreeCap;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  if (*end != '\0' || v == 0) throw ValidationError("RBEZ_DEGREE_CAP must be a positive integer");
  return v;
}

int cmd_eval(const EvalArgs& args, std::ostream& out) {
  return dispatch(args.common.exact, [&](auto tag) { return eval_impl<decltype(tag)>(args, out); });
}

int cmd_endpoints(const EndpointsArgs& args, std::ostream& out, std::ostream& diag) {
  return dispatch(args.common.exact,
                  [&](auto tag) { return endpoints_impl<decltype(tag)>(args, out, diag); });
}

int cmd_bound(const BoundArgs& args, std::ostream& out) {
  return dispatch(args.common.exact, [&](auto tag) { return bound_impl<decltype(tag)>(args, out); });
}

int cmd_sample(const SampleArgs& args, std::ostream& out) {
  return dispatch(args.common.exact, [&](auto tag) { return sample_impl<decltype(tag)>(args, out); });
}

int cmd_verify(const VerifyArgs& args, std::ostream& out) {
  RationalBezierCurve<Rational> curve = [&] {
    if (args.random_degree) return random_curve(*args.random_degree, args.random_dim, args.random_seed);
    if (args.common.curve_file.empty()) throw ValidationError("verify needs a curve file or --random n d seed");
    return load_curve_file<Rational>(args.common.curve_file);
  }();
  VerifyOptions options;
  options.max_order = args.max_order;
  options.degree_cap = args.common.degree_cap;
  options.tamper_weight_level = args.tamper_level;
  if (options.tamper_weight_level && (*options.tamper_weight_level > args.max_order)) {
    throw ValidationError("tamper level exceeds --max-order");
  }
  const VerificationReport report = verify_curve(curve, options);
  out << "curve " << curve_to_json(curve) << '\n';
  out << report.format();
  out << (report.all_passed() ? "ALL PASS" : "VERIFICATION FAILED") << '\n';
  return report.all_passed() ? kOk : kVerificationFailed;
}

}  // namespace rbez::cli
