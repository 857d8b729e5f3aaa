#include "rbez/verify.hpp"

#include <cmath>
#include <sstream>

#include "rbez/oracle.hpp"

namespace rbez {

namespace {

double deviation(const Vec<Rational>& a, const Vec<Rational>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) m = std::max(m, std::fabs(to_double(Rational(a[i] - b[i]))));
  return m;
}

/// Relative 1e-9 with an absolute floor of 1e-12, the float-path tolerance for k <= 5.
bool float_close(const Vec<double>& got, const Vec<Rational>& want, double& dev) {
  bool ok = true;
  for (std::size_t i = 0; i < got.dim(); ++i) {
    const double w = to_double(want[i]);
    const double d = std::fabs(got[i] - w);
    dev = std::max(dev, d);
    if (d > std::max(1e-9 * std::fabs(w), 1e-12)) ok = false;
  }
  return ok;
}

class Check {
 public:
  explicit Check(std::string name) { result_.name = std::move(name); }
  void compare(const Vec<Rational>& got, const Vec<Rational>& want, const std::string& where) {
    if (got == want) return;
    fail(deviation(got, want), where);
  }
  void fail(double dev, const std::string& where) {
    if (result_.passed) result_.detail = "first failure at " + where;
    result_.passed = false;
    result_.max_deviation = std::max(result_.max_deviation, dev);
  }
  void observe(double dev) { result_.max_deviation = std::max(result_.max_deviation, dev); }
  CheckResult finish() { return std::move(result_); }

 private:
  CheckResult result_;
};

std::string at(std::size_t k, const Rational& t) { return "k=" + std::to_string(k) + " t=" + t.get_str(); }

}  // namespace

bool VerificationReport::all_passed() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

std::string VerificationReport::format() const {
  std::ostringstream out;
  for (const auto& c : checks) {
    out << (c.passed ? "PASS" : "FAIL") << "  " << c.name << "  max_dev=" << format_scalar(c.max_deviation);
    if (!c.detail.empty()) out << "  (" << c.detail << ")";
    out << '\n';
  }
  return out.str();
}

std::vector<Rational> oracle_parameters() {
  return {Rational(0), Rational(1, 7), Rational(1, 3), Rational(1, 2), Rational(2, 3), Rational(1)};
}

VerificationReport verify_curve(const RationalBezierCurve<Rational>& curve, const VerifyOptions& options) {
  const std::size_t K = options.max_order;
  derivative_degree(curve.degree(), K, options.degree_cap);
  VerificationReport report;

  auto tables = DerivativeTables<Rational>::build(curve, K, options.degree_cap);
  const auto reverse = DerivativeTables<Rational>::build(curve.reversed(), K, options.degree_cap);
  if (options.tamper_weight_level) {
    const std::size_t level = *options.tamper_weight_level;
    const std::size_t mid = tables.level(level).weights.degree() / 2;
    tables = tables.with_weight_perturbed(level, mid, Rational(1));
  }

  if (K >= 1) {
    Check zero("coefficient zero-sum");
    const auto r = check_zero_sum(tables, Vec<Rational>(std::vector<Rational>(curve.dim(), Rational(7))));
    for (const auto& e : r.entries) {
      if (!e.pass) zero.fail(e.deviation, "level " + std::to_string(e.level) + " index " + std::to_string(e.index));
    }
    report.checks.push_back(zero.finish());

    Check sym("reversal symmetry");
    const auto s = check_symmetry(curve, K, options.degree_cap);
    for (const auto& e : s.entries) {
      if (!e.pass) sym.fail(e.deviation, "level " + std::to_string(e.level) + " index " + std::to_string(e.index));
    }
    report.checks.push_back(sym.finish());
  }

  {
    Check ends("weight endpoint powers");
    const Rational& w0 = curve.weights().front();
    const Rational& wn = curve.weights().back();
    for (std::size_t j = 0; j <= K; ++j) {
      const auto& w = tables.level(j).weights;
      const std::uint64_t e = std::uint64_t{1} << j;
      if (w[0] != power(w0, e)) ends.fail(std::fabs(to_double(Rational(w[0] - power(w0, e)))), "level " + std::to_string(j) + " start");
      if (w[w.degree()] != power(wn, e)) ends.fail(std::fabs(to_double(Rational(w[w.degree()] - power(wn, e)))), "level " + std::to_string(j) + " end");
    }
    report.checks.push_back(ends.finish());
  }

  {
    Check ident("denominator identity");
    const auto den = denominator_poly(curve);
    for (std::size_t j = 0; j <= K; ++j) {
      for (int i = 0; i <= 10; ++i) {
        const Rational t = from_ratio<Rational>(i, 10);
        const Rational want = power(eval(den, t), std::uint64_t{1} << j);
        const Rational got = eval(tables.level(j).weights, t);
        if (got != want) ident.fail(std::fabs(to_double(Rational(got - want))), at(j, t));
      }
    }
    report.checks.push_back(ident.finish());
  }

  const auto params = oracle_parameters();
  {
    Check eq("leibniz oracle equivalence");
    for (std::size_t k = 0; k <= K; ++k) {
      for (const Rational& t : params) {
        eq.compare(derivative_at(tables, k, t), oracle::leibniz_derivative(curve, k, t), at(k, t));
      }
    }
    report.checks.push_back(eq.finish());
  }

  {
    Check endpoints("endpoint consistency");
    Check reduced("reduced endpoint consistency");
    for (std::size_t k = 0; k <= K; ++k) {
      const auto at0 = derivative_at(tables, k, Rational(0));
      const auto at1 = derivative_at(tables, k, Rational(1));
      endpoints.compare(endpoint_derivative(tables, reverse, k, End::Start), at0, at(k, Rational(0)));
      endpoints.compare(endpoint_derivative(tables, reverse, k, End::Finish), at1, at(k, Rational(1)));
      if (k >= 1) {
        const Rational sign = k % 2 == 0 ? 1 : -1;
        reduced.compare(endpoint_derivative_reduced(tables, k), at0, at(k, Rational(0)));
        reduced.compare(endpoint_derivative_reduced(reverse, k) * sign, at1, at(k, Rational(1)));
      }
    }
    report.checks.push_back(endpoints.finish());
    report.checks.push_back(reduced.finish());
  }

  if (curve.degree() == 1 && K >= 1) {
    Check line("degree-1 closed form");
    for (std::size_t k = 1; k <= K; ++k) {
      for (const Rational& t : params) {
        line.compare(derivative_at(tables, k, t), oracle::closed_form_line(curve, k, t), at(k, t));
      }
    }
    report.checks.push_back(line.finish());
  }

  {
    Check fl("float path agreement");
    const auto fcurve = convert_curve<double>(curve);
    const auto ftables = DerivativeTables<double>::build(fcurve, K, options.degree_cap);
    for (std::size_t k = 0; k <= K; ++k) {
      for (const Rational& t : params) {
        double dev = 0.0;
        const auto want = oracle::leibniz_derivative(curve, k, t);
        if (!float_close(derivative_at(ftables, k, to_double(t)), want, dev)) {
          fl.fail(dev, at(k, t));
        } else {
          fl.observe(dev);
        }
      }
    }
    report.checks.push_back(fl.finish());
  }

  return report;
}

}  // namespace rbez
