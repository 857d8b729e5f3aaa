// rbez: derivatives of rational Bezier curves from the command line.
//
//   rbez eval curve.json --t 1/2 --order 3 --exact
//   rbez endpoints curve.json --order 2
//   rbez bound curve.json --order 1 --elevate 8 --norm inf --compare-samples 1001
//   rbez sample curve.json --order 1 --samples 101 --out d1.csv
//   rbez verify --random 3 2 42 --max-order 4

#include <iostream>
#include <vector>

#include "CLI11.hpp"
#include "commands.hpp"
#include "rbez/error.hpp"

namespace {

int exit_code_for(const rbez::Error& e) {
  using Kind = rbez::Error::Kind;
  switch (e.kind()) {
    case Kind::Parse:
    case Kind::Validation:
    case Kind::Domain: return rbez::cli::kBadInput;
    case Kind::Pole: return rbez::cli::kPole;
    case Kind::DegreeCap: return rbez::cli::kDegreeOverflow;
    case Kind::Io: return rbez::cli::kIo;
  }
  return rbez::cli::kBadInput;
}

void add_common(CLI::App* cmd, rbez::cli::Common& common, bool file_required = true) {
  auto* file = cmd->add_option("curve", common.curve_file, "Curve JSON file");
  if (file_required) file->required();
  cmd->add_flag("--exact", common.exact, "Exact rational arithmetic; prints fractions");
}

}  // namespace

int main(int argc, char** argv) {
  using namespace rbez::cli;

  CLI::App app{"Arbitrary-order derivatives of rational Bezier curves"};
  app.require_subcommand(1);
  std::uint64_t cap_override = 0;
  app.add_option("--degree-cap", cap_override,
                 "Maximum representation degree 2^k*n (default 65536, or RBEZ_DEGREE_CAP)");

  EvalArgs eval_args;
  auto* eval = app.add_subcommand("eval", "Evaluate the k-th derivative at t");
  add_common(eval, eval_args.common);
  eval->add_option("--t", eval_args.t, "Parameter (decimal or p/q)")->required();
  eval->add_option("--order,-k", eval_args.order, "Derivative order")->default_val(0);
  eval->add_flag("--allow-outside", eval_args.allow_outside, "Permit t outside [0,1]");

  EndpointsArgs end_args;
  auto* endpoints = app.add_subcommand("endpoints", "k-th derivative at t=0 and t=1");
  add_common(endpoints, end_args.common);
  endpoints->add_option("--order,-k", end_args.order, "Derivative order")->default_val(0);

  BoundArgs bound_args;
  std::size_t compare_samples = 0;
  auto* bound = app.add_subcommand("bound", "Upper bound of the k-th derivative norm on [0,1]");
  add_common(bound, bound_args.common);
  bound->add_option("--order,-k", bound_args.order, "Derivative order")->default_val(0);
  bound->add_option("--elevate,-e", bound_args.elevate, "Degree elevation steps")->default_val(0);
  bound->add_option("--norm,-p", bound_args.norm, "1, 2 or inf")->default_val("inf");
  auto* compare = bound->add_option("--compare-samples", compare_samples,
                                    "Also report the sampled supremum over N uniform parameters");

  SampleArgs sample_args;
  auto* sample = app.add_subcommand("sample", "CSV of the k-th derivative at N uniform parameters");
  add_common(sample, sample_args.common);
  sample->add_option("--order,-k", sample_args.order, "Derivative order")->default_val(0);
  sample->add_option("--samples,-n", sample_args.samples, "Number of samples (>= 2)")->required();
  sample->add_option("--out,-o", sample_args.out, "Output CSV (default stdout)");

  VerifyArgs verify_args;
  std::vector<std::uint64_t> random_spec;
  std::size_t tamper_level = 0;
  auto* verify = app.add_subcommand("verify", "Cross-check the derivative tables; nonzero exit on failure");
  add_common(verify, verify_args.common, false);
  auto* random = verify->add_option("--random", random_spec, "Random curve: degree dimension seed")
                     ->expected(3);
  verify->add_option("--max-order,-K", verify_args.max_order, "Highest order checked")->default_val(4);
  auto* tamper = verify->add_option("--tamper-weight-table", tamper_level,
                                    "Negative control: corrupt one weight-table entry at LEVEL");
  tamper->group("");  // internal test hook, hidden from --help

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    const std::uint64_t cap = cap_override != 0 ? cap_override : degree_cap_from_env();
    for (Common* c : {&eval_args.common, &end_args.common, &bound_args.common, &sample_args.common,
                      &verify_args.common}) {
      c->degree_cap = cap;
    }
    if (*eval) return cmd_eval(eval_args, std::cout);
    if (*endpoints) return cmd_endpoints(end_args, std::cout, std::cerr);
    if (*bound) {
      if (compare->count() > 0) bound_args.compare_samples = compare_samples;
      return cmd_bound(bound_args, std::cout);
    }
    if (*sample) return cmd_sample(sample_args, std::cout);
    if (*verify) {
      if (random->count() > 0) {
        verify_args.random_degree = static_cast<std::size_t>(random_spec[0]);
        verify_args.random_dim = static_cast<std::size_t>(random_spec[1]);
        verify_args.random_seed = random_spec[2];
      }
      if (tamper->count() > 0) verify_args.tamper_level = tamper_level;
      return cmd_verify(verify_args, std::cout);
    }
  } catch (const rbez::Error& e) {
    std::cerr << "rbez: " << e.what() << '\n';
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "rbez: " << e.what() << '\n';
    return kBadInput;
  }
  return kBadInput;
}
