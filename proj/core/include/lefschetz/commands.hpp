#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lefschetz/fp.hpp"

namespace lefschetz {

/// Exit-code contract, uniform across commands:
///   0 = certified (WLP holds / smooth with maximal rank / clean sweep)
///   2 = not certified (suspected or certified failure, singular input, red flags)
///   1 = input error (parse, config, non-Artinian quotient, bad parameters)
struct CommandResult {
  int exit_code = 0;
  nlohmann::json document;  // emitted to stdout as JSON
  std::string csv;          // sweep only; empty otherwise
};

struct CheckArgs {
  std::vector<std::string> generators;  // polynomial texts; empty when random_n is set
  int random_n = -1;                    // --random n d: n+1 random forms of degree d in n+1 vars
  int random_d = 0;
  int num_vars = -1;  // override for explicit generators (default: inferred)
  std::uint64_t seed = 0;
  int trials = 5;
  bool rational = false;
  std::uint64_t prime = kMersenne61;
  bool shortcut = true;
  int cap = -1;
  std::uint64_t escalation_limit = 200;
};

struct BoundsArgs {
  int n = 0;
  int d = 0;
  std::optional<int> b1;
};

struct JacobianArgs {
  std::string polynomial;
  int num_vars = -1;
  std::uint64_t seed = 0;
  int trials = 5;
  bool rational = false;
  std::uint64_t prime = kMersenne61;
  std::uint64_t escalation_limit = 200;
};

struct SweepArgs {
  std::string config_path;  // one of config_path / config_text must be set
  std::string config_text;
  std::optional<std::uint64_t> seed_override;
  std::optional<std::string> csv_override;
};

CommandResult run_check(const CheckArgs& args);
CommandResult run_bounds(const BoundsArgs& args);
CommandResult run_jacobian(const JacobianArgs& args);
CommandResult run_sweep_command(const SweepArgs& args);

}  // namespace lefschetz
