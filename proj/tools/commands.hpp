#ifndef RBEZ_TOOLS_COMMANDS_HPP
#define RBEZ_TOOLS_COMMANDS_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace rbez::cli {

// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kBadInput = 2,
  kPole = 3,
  kDegreeOverflow = 4,
  kIo = 5,
};

struct Common {
  std::string curve_file;
  bool exact = false;
  std::uint64_t degree_cap = 0;
};

struct EvalArgs {
  Common common;
  std::string t;
  std::size_t order = 0;
  bool allow_outside = false;
};

struct EndpointsArgs {
  Common common;
  std::size_t order = 0;
};

struct BoundArgs {
  Common common;
  std::size_t order = 0;
  std::size_t elevate = 0;
  std::string norm = "inf";
  std::optional<std::size_t> compare_samples;
};

struct SampleArgs {
  Common common;
  std::size_t order = 0;
  std::size_t samples = 0;
  std::string out;
};

struct VerifyArgs {
  Common common;
  std::optional<std::size_t> random_degree;
  std::size_t random_dim = 0;
  std::uint64_t random_seed = 0;
  std::size_t max_order = 4;
  std::optional<std::size_t> tamper_level;
};

int cmd_eval(const EvalArgs& args, std::ostream& out);
int cmd_endpoints(const EndpointsArgs& args, std::ostream& out, std::ostream& diag);
int cmd_bound(const BoundArgs& args, std::ostream& out);
int cmd_sample(const SampleArgs& args, std::ostream& out);
int cmd_verify(const VerifyArgs& args, std::ostream& out);

/// RBEZ_DEGREE_CAP when set, else the library default.
std::uint64_t degree_cap_from_env();

}  // namespace rbez::cli

#endif  // RBEZ_TOOLS_COMMANDS_HPP
