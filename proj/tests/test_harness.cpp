#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "lefschetz/commands.hpp"
#include "lefschetz/report_json.hpp"
#include "lefschetz/rng.hpp"
#include "lefschetz/sweep.hpp"
#include "schema_check.hpp"

using namespace lefschetz;
using nlohmann::json;

namespace {

const char* kGoodConfig =
    "# tiny grid\n"
    "n_range = 3..3\n"
    "d_range = 2..3\n"
    "trials_per_cell = 2\n"
    "ell_trials = 3\n"
    "seed = 42\n";

json load_schema() {
  std::ifstream in(std::string(SCHEMAS_DIR) + "/report.schema.json");
  REQUIRE(in.good());
  return json::parse(in);
}

void expect_valid(const json& doc) {
  static const json schema = load_schema();
  std::string why;
  const bool ok = schema_check::validate(schema, schema, doc, &why);
  INFO(why);
  INFO(doc.dump(2));
  CHECK(ok);
}

int run_binary(const std::string& args) {
  const std::string cmd = std::string(WLP_BIN) + " " + args + " > /dev/null 2>&1";
  const int raw = std::system(cmd.c_str());
  REQUIRE(raw != -1);
  return WEXITSTATUS(raw);
}

}  // namespace

TEST_CASE("config parsing round trip") {
  const auto cfg = parse_config_text(kGoodConfig);
  CHECK(cfg.n_range == make_interval(3, 4));
  CHECK(cfg.d_range == make_interval(2, 4));
  CHECK(cfg.trials_per_cell == 2);
  CHECK(cfg.ell_trials == 3);
  CHECK(cfg.seed == 42);
  CHECK_FALSE(cfg.rational);
  CHECK(cfg.prime == kMersenne61);
  CHECK(cfg.scan_through == -1);
}

TEST_CASE("config accepts every documented key") {
  const auto cfg = parse_config_text(
      "n_range=3..4\n"
      "d_range=2..2\n"
      "trials_per_cell=1\n"
      "ell_trials=1\n"
      "seed=7\n"
      "field=rational\n"
      "prime=1000003\n"
      "escalation_limit=50\n"
      "output_path=/tmp/out.csv\n"
      "scan_through=auto\n"
      "full_scan_max_cols=100\n");
  CHECK(cfg.rational);
  CHECK(cfg.prime == 1000003);
  CHECK(cfg.escalation_limit == 50);
  CHECK(cfg.output_path == "/tmp/out.csv");
  CHECK(cfg.full_scan_max_cols == 100);
}

TEST_CASE("config rejections carry line numbers") {
  const auto expect_error = [](const std::string& text, const std::string& needle) {
    try {
      parse_config_text(text);
      FAIL("expected ConfigError for: ", text);
    } catch (const ConfigError& e) {
      const std::string msg = e.what();
      INFO(msg);
      CHECK(msg.find(needle) != std::string::npos);
    }
  };
  expect_error("n_range = 3..4\nd_range = 5..4\n", "d_range is empty");
  expect_error("n_range = 3..4\n", "required");
  expect_error("n_range = 3..4\nd_range = 2..3\nbogus_key = 1\n", "line 3");
  expect_error("n_range = 3..4\nd_range = 2..3\nbogus_key = 1\n", "unknown key");
  expect_error("n_range = oops\nd_range = 2..3\n", "bad range");
  expect_error("n_range\nd_range = 2..3\n", "expected key = value");
  expect_error("n_range = 2..4\nd_range = 2..3\n", "n_range must start at 3");
  expect_error("n_range = 3..4\nd_range = 1..3\n", "d_range must start at 2");
  expect_error("n_range = 3..4\nd_range = 2..3\nfield = float\n", "prime or rational");
  expect_error("n_range = 3..4\nd_range = 2..3\nprime = 42\n", "not prime");
  expect_error("n_range = 3..4\nd_range = 2..3\nscan_through = 0\n", "scan_through");
}

TEST_CASE("seed splitting yields distinct independent streams") {
  std::set<std::uint64_t> seeds;
  for (std::uint64_t cell = 0; cell < 50; ++cell) {
    const auto cell_seed = split_seed(42, cell);
    for (std::uint64_t i = 0; i < 10; ++i) seeds.insert(split_seed(cell_seed, i));
  }
  CHECK(seeds.size() == 500);
}

TEST_CASE("sweep is deterministic and self-consistent") {
  const auto cfg = parse_config_text(kGoodConfig);
  const auto r1 = run_sweep(cfg);
  const auto r2 = run_sweep(cfg);
  CHECK(sweep_csv(r1) == sweep_csv(r2));  // byte identical
  REQUIRE(r1.cells.size() == 2);          // (3,2), (3,3)
  for (const auto& cell : r1.cells) {
    REQUIRE(cell.instances.size() == 2);
    for (const auto& inst : cell.instances) {
      CHECK(inst.ci_ok);
      CHECK(inst.wlp_ok);
      CHECK(inst.status == "certified-holds");
      CHECK(inst.tier == "full");  // these grids are tiny
      CHECK(inst.socle_degree == (inst.n + 1) * (inst.d - 1));
      CHECK(inst.empirical_through >= inst.scanned_through);
    }
    CHECK(cell.agreement);
    CHECK(cell.suspected_seeds.empty());
  }
  CHECK(r1.red_flags.empty());
  CHECK(r1.all_certified());
}

TEST_CASE("sweep instances reproduce through the check command") {
  const auto cfg = parse_config_text(kGoodConfig);
  const auto result = run_sweep(cfg);
  const auto& inst = result.cells[0].instances[0];
  CheckArgs args;
  args.random_n = inst.n;
  args.random_d = inst.d;
  args.seed = inst.instance_seed;
  args.shortcut = false;
  const auto res = run_check(args);
  CHECK(res.exit_code == (inst.wlp_ok ? 0 : 2));
  CHECK(res.document["report"]["wlp_certified"] == inst.wlp_ok);
  CHECK(res.document["report"]["quotient"]["socle_degree"] == inst.socle_degree);
}

TEST_CASE("csv matches the published header contract") {
  std::ifstream in(std::string(SCHEMAS_DIR) + "/sweep-csv-v1.header");
  REQUIRE(in.good());
  std::string file_header;
  std::getline(in, file_header);
  CHECK(file_header == std::string(kSweepCsvHeader));

  const auto result = run_sweep(parse_config_text(kGoodConfig));
  const auto csv = sweep_csv(result);
  std::istringstream lines(csv);
  std::string line;
  REQUIRE(std::getline(lines, line));
  CHECK(line == file_header);
  const auto cols = static_cast<std::size_t>(std::count(line.begin(), line.end(), ',')) + 1;
  CHECK(cols == 14);
  std::size_t rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
    CHECK(static_cast<std::size_t>(std::count(line.begin(), line.end(), ',')) + 1 == cols);
    CHECK(line.find("certified-holds") != std::string::npos);
  }
  CHECK(rows == 4);  // 2 cells x 2 instances
}

TEST_CASE("json documents validate against the shipped schema") {
  // check: certified
  CheckArgs ok;
  ok.generators = {"x0^2", "x1^2", "x2^2"};
  const auto res_ok = run_check(ok);
  CHECK(res_ok.exit_code == 0);
  expect_valid(res_ok.document);
  CHECK(res_ok.document["bounds"].is_null());  // n = 2 is below the bound machinery

  CheckArgs quad;
  quad.generators = {"x0^2", "x1^2", "x2^2", "x3^2"};
  const auto res_quad = run_check(quad);
  CHECK(res_quad.exit_code == 0);
  expect_valid(res_quad.document);
  CHECK(res_quad.document["bounds"].is_object());  // n = 3, d = 2: ranges apply

  // check: certified failure (exit 2)
  CheckArgs bad;
  bad.generators = {"x0^3", "x1^3", "x2^3", "x0*x1*x2"};
  const auto res_bad = run_check(bad);
  CHECK(res_bad.exit_code == 2);
  expect_valid(res_bad.document);

  // check: random instance echo
  CheckArgs rnd;
  rnd.random_n = 3;
  rnd.random_d = 2;
  rnd.seed = 5;
  const auto res_rnd = run_check(rnd);
  CHECK(res_rnd.exit_code == 0);
  expect_valid(res_rnd.document);

  // check: input error (exit 1)
  CheckArgs err;
  err.generators = {"x0^2 + x1"};
  const auto res_err = run_check(err);
  CHECK(res_err.exit_code == 1);
  expect_valid(res_err.document);
  CHECK(res_err.document.contains("position"));

  // check: non-artinian carries the probe
  CheckArgs na;
  na.generators = {"x0^2", "x1^2"};
  na.num_vars = 3;
  const auto res_na = run_check(na);
  CHECK(res_na.exit_code == 1);
  expect_valid(res_na.document);
  CHECK(res_na.document.contains("probe"));

  // bounds
  BoundsArgs b{3, 7, std::nullopt};
  const auto res_b = run_bounds(b);
  CHECK(res_b.exit_code == 0);
  expect_valid(res_b.document);
  BoundsArgs b1{3, 7, -4};
  expect_valid(run_bounds(b1).document);
  BoundsArgs bbad{2, 7, std::nullopt};
  const auto res_bbad = run_bounds(bbad);
  CHECK(res_bbad.exit_code == 1);
  expect_valid(res_bbad.document);

  // jacobian: smooth and singular
  JacobianArgs j;
  j.polynomial = "x0^4 + x1^4 + x2^4 + x3^4";
  const auto res_j = run_jacobian(j);
  CHECK(res_j.exit_code == 0);
  expect_valid(res_j.document);
  JacobianArgs js;
  js.polynomial = "x0^2*x1";
  const auto res_js = run_jacobian(js);
  CHECK(res_js.exit_code == 2);
  expect_valid(res_js.document);

  // sweep
  SweepArgs s;
  s.config_text = kGoodConfig;
  const auto res_s = run_sweep_command(s);
  CHECK(res_s.exit_code == 0);
  expect_valid(res_s.document);
  CHECK(!res_s.csv.empty());
}

TEST_CASE("the validator itself rejects broken documents") {
  const json schema = load_schema();
  BoundsArgs b{3, 7, std::nullopt};
  json doc = run_bounds(b).document;
  std::string why;
  REQUIRE(schema_check::validate(schema, schema, doc, &why));

  json no_schema = doc;
  no_schema.erase("schema");
  CHECK_FALSE(schema_check::validate(schema, schema, no_schema));

  json bad_enum = doc;
  bad_enum["command"] = "frobnicate";
  CHECK_FALSE(schema_check::validate(schema, schema, bad_enum));

  json extra = doc;
  extra["report"]["surprise"] = 1;
  CHECK_FALSE(schema_check::validate(schema, schema, extra));

  json wrong_type = doc;
  wrong_type["report"]["n"] = "three";
  CHECK_FALSE(schema_check::validate(schema, schema, wrong_type));
}

TEST_CASE("command exit codes follow the contract") {
  // 0: certified
  CheckArgs ok;
  ok.generators = {"x0^2", "x1^2"};
  CHECK(run_check(ok).exit_code == 0);
  // 2: certified failure
  CheckArgs bad;
  bad.generators = {"x0^3", "x1^3", "x2^3", "x0*x1*x2"};
  CHECK(run_check(bad).exit_code == 2);
  // 1: parse error, bad bounds, bad config
  CheckArgs perr;
  perr.generators = {"x0^("};
  CHECK(run_check(perr).exit_code == 1);
  CHECK(run_bounds(BoundsArgs{2, 5, std::nullopt}).exit_code == 1);
  SweepArgs sc;
  sc.config_text = "n_range = 3..3\n";  // missing d_range
  CHECK(run_sweep_command(sc).exit_code == 1);
  JacobianArgs jz;
  jz.polynomial = "0";
  CHECK(run_jacobian(jz).exit_code == 1);
}

TEST_CASE("sweep command writes the csv override") {
  SweepArgs s;
  s.config_text = kGoodConfig;
  s.csv_override = "/tmp/lefschetz_harness_test.csv";
  const auto res = run_sweep_command(s);
  CHECK(res.exit_code == 0);
  std::ifstream in("/tmp/lefschetz_harness_test.csv");
  REQUIRE(in.good());
  std::string header;
  std::getline(in, header);
  CHECK(header == std::string(kSweepCsvHeader));
  std::remove("/tmp/lefschetz_harness_test.csv");
}

TEST_CASE("seed override changes the sweep") {
  SweepArgs a, b;
  a.config_text = kGoodConfig;
  b.config_text = kGoodConfig;
  b.seed_override = 43;
  const auto ra = run_sweep_command(a);
  const auto rb = run_sweep_command(b);
  REQUIRE(!ra.csv.empty());
  REQUIRE(!rb.csv.empty());
  CHECK(ra.csv != rb.csv);  // different instance seeds
  CHECK(rb.document["report"]["config"]["seed"] == 43);
}

TEST_CASE("installed binary honors the exit contract") {
  CHECK(run_binary("--help") == 0);
  CHECK(run_binary("bounds 3 7") == 0);
  CHECK(run_binary("bounds --help") == 0);
  CHECK(run_binary("check \"x0^2\" \"x1^2\" \"x2^2\"") == 0);
  CHECK(run_binary("check \"x0^3\" \"x1^3\" \"x2^3\" \"x0*x1*x2\"") == 2);
  CHECK(run_binary("check \"x0^2 + x1\"") == 1);
  CHECK(run_binary("bounds 2 5") == 1);
  CHECK(run_binary("bounds") == 1);          // missing positionals
  CHECK(run_binary("frobnicate") == 1);      // unknown subcommand
  CHECK(run_binary("") == 1);                // subcommand required
  CHECK(run_binary("sweep /nonexistent.cfg") == 1);
  CHECK(run_binary("jacobian \"x0^2*x1\"") == 2);
  CHECK(run_binary("check --random 3 2 --seed 7") == 0);
  CHECK(run_binary("check --random 3 2 --field rational") == 0);
}
