#include "lefschetz/commands.hpp"

#include <fstream>

#include "lefschetz/jacobian.hpp"
#include "lefschetz/parse.hpp"
#include "lefschetz/report_json.hpp"
#include "lefschetz/sweep.hpp"

namespace lefschetz {

using nlohmann::json;

namespace {

CommandResult error_result(const char* command, const std::string& message,
                           std::optional<std::size_t> position = std::nullopt) {
  CommandResult res;
  res.exit_code = 1;
  res.document = json{{"schema", kReportSchemaVersion}, {"command", command}, {"error", message}};
  if (position.has_value()) res.document["position"] = *position;
  return res;
}

json field_json(bool rational, std::uint64_t prime) {
  if (rational) return json{{"type", "rational"}};
  return json{{"type", "prime"}, {"p", prime}};
}

/// Infer one variable count covering every generator (explicit override wins).
int unified_num_vars(const std::vector<ParsedPoly>& polys, int override_nv) {
  int max_var = -1;
  for (const auto& p : polys) max_var = std::max(max_var, p.max_var);
  int nv = std::max(max_var + 1, 1);
  if (override_nv > 0) {
    if (override_nv < nv) {
      throw std::invalid_argument("num_vars is smaller than a variable index in the input");
    }
    nv = override_nv;
  }
  if (nv > kMaxVars) throw std::invalid_argument("too many variables");
  return nv;
}

template <class F>
CiSpecT<typename F::Value> build_spec(const F& field, const CheckArgs& args, json& input_echo) {
  if (args.random_n >= 0) {
    const int n = args.random_n;
    const int d = args.random_d;
    if (n < 1 || n + 1 > kMaxVars) throw std::invalid_argument("--random: n out of range");
    if (d < 1 || d > kMaxDegree) throw std::invalid_argument("--random: d out of range");
    CiSpecT<typename F::Value> spec;
    const std::vector<int> degrees(static_cast<std::size_t>(n) + 1, d);
    if constexpr (std::is_same_v<F, PrimeField>) {
      spec = random_ci_spec(field, n + 1, degrees, args.seed);
    } else {
      spec = random_ci_spec_q(n + 1, degrees, args.seed);
    }
    input_echo = json{{"num_vars", spec.num_vars}, {"degrees", spec.degrees}, {"seed", args.seed}};
    return spec;
  }
  if (args.generators.empty()) throw std::invalid_argument("no generators given");
  std::vector<ParsedPoly> polys;
  for (const auto& text : args.generators) polys.push_back(parse_poly_text(text));
  const int nv = unified_num_vars(polys, args.num_vars);
  CiSpecT<typename F::Value> spec;
  spec.num_vars = nv;
  for (const auto& text : args.generators) {
    auto f = parse_form(field, text, nv);
    spec.degrees.push_back(f.degree);
    spec.generators.push_back(std::move(f));
  }
  spec.validate();
  input_echo = json{{"num_vars", nv}, {"degrees", spec.degrees}, {"generators", args.generators}};
  return spec;
}

template <class F>
CommandResult check_with_field(const F& field, const CheckArgs& args) {
  json input_echo;
  auto spec = build_spec(field, args, input_echo);
  const bool equi_ci =
      static_cast<int>(spec.degrees.size()) == spec.num_vars && spec.equigenerated();
  const int n = spec.num_vars - 1;
  const int d = spec.degrees.front();

  QuotientRing<F> q(field, std::move(spec));
  WlpOptions opts;
  opts.seed = split_seed(args.seed, 1);
  opts.trials = args.trials;
  opts.shortcut = args.shortcut;
  opts.cap = args.cap;
  opts.escalation_limit = args.escalation_limit;
  const WlpReport rep = run_wlp(q, opts);

  CommandResult res;
  if (!rep.quotient.artinian) {
    res = error_result("check", "quotient is not Artinian up to degree " +
                                    std::to_string(rep.quotient.probed_through));
    res.document["input"] = input_echo;
    res.document["probe"] = to_json(rep.quotient);
    return res;
  }
  res.document = json{{"schema", kReportSchemaVersion},
                      {"command", "check"},
                      {"field", field_json(args.rational, args.prime)},
                      {"input", input_echo},
                      {"report", to_json(rep)}};
  res.document["bounds"] =
      equi_ci && n >= 3 && d >= 2 ? to_json(wlp_ranges(n, d)) : json(nullptr);
  res.exit_code = rep.wlp_certified && rep.covers_all_degrees ? 0 : 2;
  return res;
}

template <class F>
CommandResult jacobian_with_field(const F& field, const JacobianArgs& args) {
  const ParsedPoly parsed = parse_poly_text(args.polynomial);
  const int nv = unified_num_vars({parsed}, args.num_vars);
  HypersurfaceT<typename F::Value> X{parse_form(field, args.polynomial, nv)};
  if (X.f.degree < 2) throw std::invalid_argument("hypersurface degree must be >= 2");
  if (X.f.is_zero()) throw std::invalid_argument("zero polynomial");

  WlpOptions opts;
  opts.seed = split_seed(args.seed, 1);
  opts.trials = args.trials;
  opts.escalation_limit = args.escalation_limit;
  const JacobianReport rep = beauville_check(field, X, opts);

  CommandResult res;
  res.document = json{{"schema", kReportSchemaVersion},
                      {"command", "jacobian"},
                      {"field", field_json(args.rational, args.prime)},
                      {"input", json{{"polynomial", args.polynomial},
                                     {"num_vars", nv},
                                     {"degree", X.f.degree}}},
                      {"report", to_json(rep)}};
  res.exit_code = rep.smooth_certified && rep.degree_d.maximal ? 0 : 2;
  return res;
}

}  // namespace

CommandResult run_check(const CheckArgs& args) {
  try {
    if (args.rational) {
      RationalField f;
      return check_with_field(f, args);
    }
    PrimeField f(args.prime);
    return check_with_field(f, args);
  } catch (const ParseError& e) {
    return error_result("check", e.what(), e.position);
  } catch (const std::exception& e) {
    return error_result("check", e.what());
  }
}

CommandResult run_bounds(const BoundsArgs& args) {
  try {
    const BoundReport rep = wlp_ranges(args.n, args.d, args.b1);
    CommandResult res;
    res.document = json{{"schema", kReportSchemaVersion},
                        {"command", "bounds"},
                        {"report", to_json(rep)}};
    return res;
  } catch (const std::exception& e) {
    return error_result("bounds", e.what());
  }
}

CommandResult run_jacobian(const JacobianArgs& args) {
  try {
    if (args.rational) {
      RationalField f;
      return jacobian_with_field(f, args);
    }
    PrimeField f(args.prime);
    return jacobian_with_field(f, args);
  } catch (const ParseError& e) {
    return error_result("jacobian", e.what(), e.position);
  } catch (const std::exception& e) {
    return error_result("jacobian", e.what());
  }
}

CommandResult run_sweep_command(const SweepArgs& args) {
  try {
    ExperimentConfig cfg;
    if (!args.config_path.empty()) {
      cfg = parse_config_file(args.config_path);
    } else if (!args.config_text.empty()) {
      cfg = parse_config_text(args.config_text);
    } else {
      throw ConfigError("sweep: no config given");
    }
    if (args.seed_override.has_value()) cfg.seed = *args.seed_override;
    if (args.csv_override.has_value()) cfg.output_path = *args.csv_override;
    const SweepResult result = run_sweep(cfg);
    CommandResult res;
    res.csv = sweep_csv(result);
    res.document = json{{"schema", kReportSchemaVersion},
                        {"command", "sweep"},
                        {"report", to_json(result)}};
    if (!cfg.output_path.empty()) {
      std::ofstream out(cfg.output_path, std::ios::binary);
      if (!out) throw ConfigError("sweep: cannot write '" + cfg.output_path + "'");
      out << res.csv;
    }
    res.exit_code = result.all_certified() && result.red_flags.empty() ? 0 : 2;
    return res;
  } catch (const std::exception& e) {
    return error_result("sweep", e.what());
  }
}

}  // namespace lefschetz
