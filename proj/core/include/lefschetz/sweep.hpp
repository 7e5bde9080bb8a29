#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "lefschetz/bounds.hpp"
#include "lefschetz/wlp.hpp"

namespace lefschetz {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Sweep configuration, readable from a flat key = value file. Ranges use the
/// inclusive syntax "3..4". Unknown keys are rejected.
struct ExperimentConfig {
  Interval n_range;  // stored half-open; parsed from inclusive "lo..hi"
  Interval d_range;
  int trials_per_cell = 10;
  int ell_trials = 5;
  std::uint64_t seed = 0;
  bool rational = false;           // field = rational (default: prime)
  std::uint64_t prime = kMersenne61;
  std::uint64_t escalation_limit = 200;
  std::string output_path;         // CSV destination ("" = stdout only)
  int scan_through = -1;           // -1 = auto per tier policy
  std::size_t full_scan_max_cols = 3000;  // socle scan allowed when cols(e+1) fits

  void validate() const;
};

ExperimentConfig parse_config_text(const std::string& text);
ExperimentConfig parse_config_file(const std::string& path);

/// One random instance of a cell. Reproduce it in isolation with
/// `check --random n d --seed instance_seed`.
struct InstanceResult {
  int n = 0;
  int d = 0;
  int instance = 0;
  std::uint64_t instance_seed = 0;
  std::string tier;  // "full" (socle scan) or "prefix" (through the bound window)
  bool ci_ok = false;
  int socle_degree = -1;
  int scanned_through = 0;
  int empirical_through = 0;  // degrees 1..this all reached maximal rank
  bool wlp_ok = false;        // every scanned degree reached maximal rank
  std::string status;         // worst per-degree status
  WlpReport report;
  std::int64_t elapsed_ms = 0;
};

struct CellResult {
  int n = 0;
  int d = 0;
  BoundReport bounds;
  std::vector<InstanceResult> instances;
  std::vector<std::uint64_t> suspected_seeds;
  bool agreement = true;  // no failure inside any guaranteed range
  std::int64_t elapsed_ms = 0;
};

struct SweepResult {
  ExperimentConfig config;
  std::vector<CellResult> cells;

  /// A rank shortfall inside a range a theorem guarantees; never dropped.
  struct RedFlag {
    int n = 0;
    int d = 0;
    int instance = 0;
    std::uint64_t instance_seed = 0;
    int degree = 0;
    std::string status;
    std::string range;  // which guarantee was violated: main | bound2 | alzati-re | bmmn-ci
  };
  std::vector<RedFlag> red_flags;
  std::int64_t elapsed_ms = 0;

  bool all_certified() const;  // no suspected or certified failures anywhere scanned
};

/// Deterministic given the config: cell seed = split_seed(root, cell index),
/// instance seed = split_seed(cell seed, instance), generators draw from
/// purpose tag 0 and ell trials from purpose tag 1 of the instance seed.
/// Cells iterate in (n, d, instance) order.
SweepResult run_sweep(const ExperimentConfig& cfg);

/// Fixed-header CSV, one row per instance, integers and labels only (no
/// floats, no timings) so identical configs yield byte-identical output.
extern const char* const kSweepCsvHeader;
std::string sweep_csv(const SweepResult& result);

}  // namespace lefschetz
