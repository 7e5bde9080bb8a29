#include "lefschetz/sweep.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <sstream>

#include "lefschetz/hilbert.hpp"

namespace lefschetz {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

Interval parse_inclusive_range(const std::string& value, int line_no) {
  const std::size_t dots = value.find("..");
  try {
    if (dots == std::string::npos) {
      const int v = std::stoi(value);
      return make_interval(v, v + 1);
    }
    const int lo = std::stoi(trim(value.substr(0, dots)));
    const int hi = std::stoi(trim(value.substr(dots + 2)));
    return make_interval(lo, hi + 1);
  } catch (const std::exception&) {
    throw ConfigError("config line " + std::to_string(line_no) + ": bad range '" + value + "'");
  }
}

std::int64_t parse_i64(const std::string& value, int line_no) {
  try {
    std::size_t pos = 0;
    const long long v = std::stoll(value, &pos);
    if (pos != value.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw ConfigError("config line " + std::to_string(line_no) + ": bad integer '" + value + "'");
  }
}

std::uint64_t parse_u64(const std::string& value, int line_no) {
  try {
    std::size_t pos = 0;
    const unsigned long long v = std::stoull(value, &pos);
    if (pos != value.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw ConfigError("config line " + std::to_string(line_no) + ": bad integer '" + value + "'");
  }
}

std::int64_t ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                               start)
      .count();
}

const char* worst_status(const WlpReport& rep) {
  if (rep.any_certified_failure) return wlp_status_name(WlpStatus::certified_failure_over_rationals);
  if (rep.any_suspected) return wlp_status_name(WlpStatus::suspected_failure);
  return wlp_status_name(WlpStatus::certified_holds);
}

template <class F>
InstanceResult run_instance(const F& field, const ExperimentConfig& cfg, int n, int d, int instance,
                            std::uint64_t instance_seed) {
  const auto start = std::chrono::steady_clock::now();
  InstanceResult res;
  res.n = n;
  res.d = d;
  res.instance = instance;
  res.instance_seed = instance_seed;

  const int nv = n + 1;
  const std::vector<int> degrees(static_cast<std::size_t>(nv), d);
  const int e = ci_socle_degree(degrees);
  const std::uint64_t cols_at_socle = monomial_count(nv, e + 1);
  const bool full = cols_at_socle <= cfg.full_scan_max_cols;
  res.tier = full ? "full" : "prefix";

  int scan_through;
  if (cfg.scan_through >= 1) {
    scan_through = std::min(cfg.scan_through, e + 1);
  } else if (full) {
    scan_through = e + 1;
  } else {
    scan_through = std::min(d + ceil_div(d, n) + 1, e + 1);
  }
  res.scanned_through = scan_through;
  res.socle_degree = e;

  CiSpecT<typename F::Value> spec;
  if constexpr (std::is_same_v<F, PrimeField>) {
    spec = random_ci_spec(field, nv, degrees, instance_seed);
  } else {
    spec = random_ci_spec_q(nv, degrees, instance_seed);
  }
  QuotientRing<F> q(field, std::move(spec));

  WlpOptions opts;
  opts.seed = split_seed(instance_seed, 1);
  opts.trials = cfg.ell_trials;
  opts.shortcut = false;
  opts.prefix_through = scan_through;
  opts.escalation_limit = cfg.escalation_limit;
  opts.cap = e + 1;
  res.report = run_wlp(q, opts);

  res.ci_ok = full ? res.report.quotient.ci_certified
                   : res.report.quotient.ci_match_through >= res.report.quotient.probed_through &&
                         res.report.quotient.probed_through >= scan_through;
  res.scanned_through = res.report.checked_through;
  res.wlp_ok = res.report.wlp_certified;
  int through = 0;
  for (const auto& v : res.report.degrees) {
    if (v.degree == through + 1 && v.maximal) {
      through = v.degree;
    } else {
      break;
    }
  }
  res.empirical_through = through;
  res.status = worst_status(res.report);
  res.elapsed_ms = ms_since(start);
  return res;
}

void collect_flags(const CellResult& cell, const InstanceResult& inst, SweepResult& out) {
  std::vector<std::pair<std::string, Interval>> guarantees;
  guarantees.emplace_back("main", cell.bounds.range_main);
  guarantees.emplace_back("bound2", cell.bounds.range_bound2);
  for (const auto& entry : cell.bounds.registry) guarantees.emplace_back(entry.source, entry.range);
  for (const auto& v : inst.report.degrees) {
    if (v.maximal) continue;
    for (const auto& [name, range] : guarantees) {
      if (range.contains(v.degree)) {
        out.red_flags.push_back({inst.n, inst.d, inst.instance, inst.instance_seed, v.degree,
                                 wlp_status_name(v.status), name});
      }
    }
  }
}

}  // namespace

void ExperimentConfig::validate() const {
  if (n_range.empty()) throw ConfigError("config: n_range is empty");
  if (d_range.empty()) throw ConfigError("config: d_range is empty");
  if (n_range.lo < 3) throw ConfigError("config: n_range must start at 3 (the bounds require n >= 3)");
  if (d_range.lo < 2) throw ConfigError("config: d_range must start at 2 (the bounds require d >= 2)");
  if (n_range.hi_excl - 1 > kMaxVars - 1) throw ConfigError("config: n_range exceeds kMaxVars - 1");
  if (trials_per_cell < 1) throw ConfigError("config: trials_per_cell must be >= 1");
  if (ell_trials < 1) throw ConfigError("config: ell_trials must be >= 1");
  if (!rational && !is_prime_u64(prime)) throw ConfigError("config: prime is not prime");
  if (scan_through == 0 || scan_through < -1) throw ConfigError("config: scan_through must be >= 1 or auto");
}

ExperimentConfig parse_config_text(const std::string& text) {
  ExperimentConfig cfg;
  bool saw_n = false, saw_d = false;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped[0] == '#') continue;
    const std::size_t eq = stripped.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config line " + std::to_string(line_no) + ": expected key = value");
    }
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    if (key == "n_range") {
      cfg.n_range = parse_inclusive_range(value, line_no);
      saw_n = true;
    } else if (key == "d_range") {
      cfg.d_range = parse_inclusive_range(value, line_no);
      saw_d = true;
    } else if (key == "trials_per_cell") {
      cfg.trials_per_cell = static_cast<int>(parse_i64(value, line_no));
    } else if (key == "ell_trials") {
      cfg.ell_trials = static_cast<int>(parse_i64(value, line_no));
    } else if (key == "seed") {
      cfg.seed = parse_u64(value, line_no);
    } else if (key == "field") {
      if (value == "prime") {
        cfg.rational = false;
      } else if (value == "rational") {
        cfg.rational = true;
      } else {
        throw ConfigError("config line " + std::to_string(line_no) + ": field must be prime or rational");
      }
    } else if (key == "prime") {
      cfg.prime = parse_u64(value, line_no);
    } else if (key == "escalation_limit") {
      cfg.escalation_limit = parse_u64(value, line_no);
    } else if (key == "output_path") {
      cfg.output_path = value;
    } else if (key == "scan_through") {
      cfg.scan_through = value == "auto" ? -1 : static_cast<int>(parse_i64(value, line_no));
    } else if (key == "full_scan_max_cols") {
      cfg.full_scan_max_cols = static_cast<std::size_t>(parse_u64(value, line_no));
    } else {
      throw ConfigError("config line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    }
  }
  if (!saw_n || !saw_d) throw ConfigError("config: n_range and d_range are required");
  cfg.validate();
  return cfg;
}

ExperimentConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

bool SweepResult::all_certified() const {
  for (const auto& cell : cells) {
    for (const auto& inst : cell.instances) {
      if (!inst.wlp_ok) return false;
    }
  }
  return true;
}

SweepResult run_sweep(const ExperimentConfig& cfg) {
  cfg.validate();
  const auto start = std::chrono::steady_clock::now();
  SweepResult out;
  out.config = cfg;
  int cell_index = 0;
  for (int n = cfg.n_range.lo; n < cfg.n_range.hi_excl; ++n) {
    for (int d = cfg.d_range.lo; d < cfg.d_range.hi_excl; ++d, ++cell_index) {
      const auto cell_start = std::chrono::steady_clock::now();
      CellResult cell;
      cell.n = n;
      cell.d = d;
      cell.bounds = wlp_ranges(n, d);
      const std::uint64_t cell_seed = split_seed(cfg.seed, static_cast<std::uint64_t>(cell_index));
      for (int i = 0; i < cfg.trials_per_cell; ++i) {
        const std::uint64_t instance_seed = split_seed(cell_seed, static_cast<std::uint64_t>(i));
        InstanceResult inst;
        if (cfg.rational) {
          RationalField f;
          inst = run_instance(f, cfg, n, d, i, instance_seed);
        } else {
          PrimeField f(cfg.prime);
          inst = run_instance(f, cfg, n, d, i, instance_seed);
        }
        if (inst.status != wlp_status_name(WlpStatus::certified_holds)) {
          cell.suspected_seeds.push_back(instance_seed);
        }
        collect_flags(cell, inst, out);
        cell.instances.push_back(std::move(inst));
      }
      cell.agreement = true;
      for (const auto& flag : out.red_flags) {
        if (flag.n == n && flag.d == d) cell.agreement = false;
      }
      cell.elapsed_ms = ms_since(cell_start);
      out.cells.push_back(std::move(cell));
    }
  }
  out.elapsed_ms = ms_since(start);
  return out;
}

const char* const kSweepCsvHeader =
    "n,d,instance,instance_seed,tier,ci_ok,socle_degree,main_lo,main_hi_excl,bound2_hi_incl,"
    "scanned_through,empirical_through,wlp_ok,status";

std::string sweep_csv(const SweepResult& result) {
  std::ostringstream csv;
  csv << kSweepCsvHeader << '\n';
  for (const auto& cell : result.cells) {
    for (const auto& inst : cell.instances) {
      csv << inst.n << ',' << inst.d << ',' << inst.instance << ',' << inst.instance_seed << ','
          << inst.tier << ',' << int{inst.ci_ok} << ',' << inst.socle_degree << ','
          << cell.bounds.range_main.lo << ',' << cell.bounds.range_main.hi_excl << ','
          << cell.bounds.range_bound2.hi_excl - 1 << ',' << inst.scanned_through << ','
          << inst.empirical_through << ',' << int{inst.wlp_ok} << ',' << inst.status << '\n';
    }
  }
  return csv.str();
}

}  // namespace lefschetz
