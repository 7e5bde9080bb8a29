// wlp: decide the weak Lefschetz property of Artinian graded quotients by
// exact rank computations, and evaluate the closed-form degree bounds.
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lefschetz/commands.hpp"

namespace {

int emit(const lefschetz::CommandResult& res) {
  std::cout << res.document.dump(2) << "\n";
  return res.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"weak Lefschetz property checker and bound calculator"};
  app.require_subcommand(1);

  bool json_out = true;  // JSON is the only report format; flag kept for scripts

  lefschetz::CheckArgs check_args;
  std::vector<int> random_nd;
  std::string field_name = "prime";
  bool no_shortcut = false;

  auto* check = app.add_subcommand(
      "check", "certify WLP of the quotient by the given (or random) generators");
  check->add_option("generators", check_args.generators,
                    "homogeneous generators, e.g. \"x0^2\" \"x1^2 + 3*x0*x1\"");
  check->add_option("--random", random_nd, "n d: n+1 random dense forms of degree d in n+1 vars")
      ->expected(2);
  check->add_option("--seed", check_args.seed, "root seed (default 0)");
  check->add_option("--trials", check_args.trials, "linear forms tried per degree (default 5)");
  check->add_option("--field", field_name, "prime | rational (default prime)");
  check->add_option("--prime", check_args.prime, "modulus for --field prime (default 2^61-1)");
  check->add_option("--nvars", check_args.num_vars, "variable count override");
  check->add_flag("--no-shortcut", no_shortcut, "test every degree instead of the CI middle degrees");
  check->add_option("--cap", check_args.cap, "Artinian probe cap override");
  check->add_option("--escalation-limit", check_args.escalation_limit,
                    "max graded dimension for the exact rational recheck (default 200)");

  lefschetz::BoundsArgs bounds_args;
  int b1_in = 0;
  auto* bounds = app.add_subcommand("bounds", "closed-form WLP degree ranges for n+1 forms of degree d");
  bounds->add_option("n", bounds_args.n, "projective dimension (>= 3)")->required();
  bounds->add_option("d", bounds_args.d, "generator degree (>= 2)")->required();
  auto* b1_opt = bounds->add_option("--b1", b1_in, "generic first splitting twist for the t < -b1 range");

  lefschetz::JacobianArgs jac_args;
  std::string jac_field_name = "prime";
  auto* jacobian = app.add_subcommand(
      "jacobian", "smoothness and WLP-in-degree-d report for the Jacobian ideal of f");
  jacobian->add_option("polynomial", jac_args.polynomial, "defining form, e.g. \"x0^5 + x1^5 + x2^5\"")
      ->required();
  jacobian->add_option("--seed", jac_args.seed, "root seed (default 0)");
  jacobian->add_option("--trials", jac_args.trials, "linear forms tried (default 5)");
  jacobian->add_option("--field", jac_field_name, "prime | rational (default prime)");
  jacobian->add_option("--prime", jac_args.prime, "modulus for --field prime");
  jacobian->add_option("--nvars", jac_args.num_vars, "variable count override");
  jacobian->add_option("--escalation-limit", jac_args.escalation_limit,
                       "max graded dimension for the exact rational recheck");

  lefschetz::SweepArgs sweep_args;
  std::uint64_t sweep_seed = 0;
  std::string sweep_csv_path;
  auto* sweep = app.add_subcommand("sweep", "random-instance sweep over an (n, d) grid");
  sweep->add_option("config", sweep_args.config_path, "flat key = value config file")->required();
  auto* sweep_seed_opt = sweep->add_option("--seed", sweep_seed, "override the config seed");
  auto* sweep_csv_opt = sweep->add_option("--csv", sweep_csv_path, "override the CSV output path");

  for (auto* sub : {check, bounds, jacobian, sweep})
    sub->add_flag("--json", json_out, "emit the JSON report on stdout (default)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;  // usage problems are input errors
  }

  if (*check) {
    if (!random_nd.empty()) {
      check_args.random_n = random_nd[0];
      check_args.random_d = random_nd[1];
    }
    check_args.rational = field_name == "rational";
    check_args.shortcut = !no_shortcut;
    if (!check_args.rational && field_name != "prime") {
      std::cerr << "unknown field: " << field_name << "\n";
      return 1;
    }
    return emit(lefschetz::run_check(check_args));
  }
  if (*bounds) {
    if (*b1_opt) bounds_args.b1 = b1_in;
    return emit(lefschetz::run_bounds(bounds_args));
  }
  if (*jacobian) {
    jac_args.rational = jac_field_name == "rational";
    if (!jac_args.rational && jac_field_name != "prime") {
      std::cerr << "unknown field: " << jac_field_name << "\n";
      return 1;
    }
    return emit(lefschetz::run_jacobian(jac_args));
  }
  if (*sweep) {
    if (*sweep_seed_opt) sweep_args.seed_override = sweep_seed;
    if (*sweep_csv_opt) sweep_args.csv_override = sweep_csv_path;
    return emit(lefschetz::run_sweep_command(sweep_args));
  }
  return 1;
}
