#include "qlg/config.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "qlg/experiments.hpp"
#include "qlg/report.hpp"

using namespace qlg;
namespace fs = std::filesystem;

namespace {

bool has_message(const std::vector<ConfigDiagnostic>& diags, int line,
                 const std::string& needle) {
  for (const auto& d : diags)
    if (d.line == line && d.message.find(needle) != std::string::npos)
      return true;
  return false;
}

std::string read_bytes(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / name;
  fs::remove_all(dir);
  return dir;
}

SpinorField awkward_field() {
  // Values chosen to stress the 17-digit round trip: non-terminating binary
  // fractions, huge and tiny magnitudes, signed zero.
  SpinorField f(3);
  f.at(0, 0) = Complex{1.0 / 3.0, -0.1};
  f.at(0, 3) = Complex{1e300, 5e-324};
  f.at(1, 1) = Complex{-0.0, 123456789.123456789};
  f.at(2, 2) = Complex{-2.5e-308, 0.7071067811865476};
  return f;
}

}  // namespace

TEST_CASE("experiment_names_round_trip") {
  for (Experiment e : {Experiment::Dirac1d, Experiment::Dispersion,
                       Experiment::Bcs, Experiment::Bdg, Experiment::Superfluid,
                       Experiment::Verify, Experiment::TrotterCompare}) {
    const auto back = experiment_from_string(to_string(e));
    REQUIRE(back.has_value());
    CHECK(*back == e);
  }
  CHECK(!experiment_from_string("warp-drive").has_value());
}

TEST_CASE("parse_config_accepts_a_full_file") {
  const std::string text =
      "# run setup\n"
      "experiment = dispersion\n"
      "sites = 128\n"
      "steps = 10\n"
      "m_tau = 0.6   # gap parameter\n"
      "k_points = 33\n"
      "seed = 99\n"
      "out_dir = runs/disp\n"
      "format = json\n"
      "init = plane_wave\n"
      "k_index = 5\n"
      "pairs = 1:2, 3:4\n"
      "delta_re = 0.25\n"
      "delta_im = -0.5\n"
      "pairing_mode = local\n"
      "\n";
  const ConfigParseResult r = parse_config(text);
  CHECK(r.diagnostics.empty());
  REQUIRE(r.config.has_value());
  const SimConfig& c = *r.config;
  CHECK(c.experiment == Experiment::Dispersion);
  CHECK(c.sites == 128);
  CHECK(c.steps == 10);
  CHECK(c.m_tau == 0.6);
  CHECK(c.k_points == 33);
  CHECK(c.seed == 99);
  CHECK(c.out_dir == "runs/disp");
  CHECK(c.format == OutputFormat::Json);
  CHECK(c.init == InitKind::PlaneWave);
  CHECK(c.k_index == 5);
  REQUIRE(c.pairs.size() == 2);
  CHECK(c.pairs[0] == std::pair<int, int>{1, 2});
  CHECK(c.pairs[1] == std::pair<int, int>{3, 4});
  CHECK(c.delta == Complex{0.25, -0.5});
  CHECK(c.pairing_mode == PairingMode::Local);
}

TEST_CASE("parse_config_defaults") {
  const ConfigParseResult r = parse_config("experiment = verify\n");
  REQUIRE(r.config.has_value());
  const SimConfig& c = *r.config;
  CHECK(c.sites == 64);
  CHECK(c.steps == 100);
  CHECK(c.m_tau == 0.0);
  CHECK(c.tau == 1.0);
  CHECK(c.e_tau == -1.0);
  CHECK(c.k_ell == 0.5);
  CHECK(c.qubits == 4);
  CHECK(c.pairs == std::vector<std::pair<int, int>>{{1, 2}});
  CHECK(c.pairing_mode == PairingMode::GlobalMean);
  CHECK(c.init == InitKind::Random);
  CHECK(c.k_points == 0);
  CHECK(c.n_max == 256);
  CHECK(c.seed == 1);
  CHECK(c.out_dir == "out");
  CHECK(c.format == OutputFormat::Csv);
}

TEST_CASE("parse_config_collects_every_violation_with_line_numbers") {
  const std::string text =
      "experiment = dirac1d\n"    // 1
      "m_tau = 1.5\n"             // 2: domain
      "sites = banana\n"          // 3: not an integer
      "warp = 9\n"                // 4: unknown key
      "steps 12\n"                // 5: shape
      "m_tau = 0.2\n"             // 6: duplicate
      "tau = -1\n"                // 7: domain
      "k_ell = 4.0\n"             // 8: domain
      "qubits = 40\n";            // 9: range
  const ConfigParseResult r = parse_config(text);
  CHECK(!r.config.has_value());
  CHECK(has_message(r.diagnostics, 2, "`m_tau` must lie in [0, 1]"));
  CHECK(has_message(r.diagnostics, 3, "not an integer"));
  CHECK(has_message(r.diagnostics, 4, "unknown key `warp`"));
  CHECK(has_message(r.diagnostics, 5, "expected `key = value`"));
  CHECK(has_message(r.diagnostics, 6, "duplicate key `m_tau`"));
  CHECK(has_message(r.diagnostics, 7, "`tau` must be positive"));
  CHECK(has_message(r.diagnostics, 8, "`k_ell` must lie in [-pi, pi]"));
  CHECK(has_message(r.diagnostics, 9, "outside [2, 12]"));
  CHECK(r.diagnostics.size() == 8);
  for (std::size_t i = 1; i < r.diagnostics.size(); ++i)
    CHECK(r.diagnostics[i - 1].line <= r.diagnostics[i].line);
}

TEST_CASE("parse_config_requires_an_experiment") {
  const ConfigParseResult r = parse_config("sites = 8\n");
  CHECK(!r.config.has_value());
  CHECK(has_message(r.diagnostics, 0, "missing required key `experiment`"));

  // A CLI subcommand fills the gap or overrides a present key.
  const ConfigParseResult forced =
      parse_config("sites = 8\n", Experiment::Dirac1d);
  REQUIRE(forced.config.has_value());
  CHECK(forced.config->experiment == Experiment::Dirac1d);

  const ConfigParseResult overridden =
      parse_config("experiment = dirac1d\neps = 0.5\n", Experiment::Bcs);
  REQUIRE(overridden.config.has_value());
  CHECK(overridden.config->experiment == Experiment::Bcs);
}

TEST_CASE("parse_config_mode_specific_domains") {
  // bcs: zero quasiparticle energy is rejected.
  CHECK(has_message(parse_config("experiment = bcs\n").diagnostics, 0,
                    "must be positive"));
  // bcs: an overlarge derived gate angle is rejected where tau appears.
  CHECK(has_message(
      parse_config("experiment = bcs\neps = 3\ndelta_re = 4\ntau = 1\n")
          .diagnostics,
      4, "E tau > 1"));
  // Explicit e_tau outside [0, 1].
  CHECK(has_message(
      parse_config("experiment = bcs\neps = 0.5\ne_tau = 1.5\n").diagnostics, 3,
      "`e_tau` must lie in [0, 1]"));
  // superfluid: uniform gap too large for the step.
  CHECK(has_message(
      parse_config("experiment = superfluid\ndelta_re = 1.25\n").diagnostics, 2,
      "|delta| tau must be <= 1"));
  // trotter-compare: slice counts double, so n_max must be a power of two.
  CHECK(has_message(
      parse_config("experiment = trotter-compare\nn_max = 6\n").diagnostics, 2,
      "power of two"));
  CHECK(parse_config("experiment = trotter-compare\nn_max = 8\n")
            .config.has_value());
  // plane-wave init needs a representable mode index.
  CHECK(has_message(
      parse_config("experiment = dirac1d\ninit = plane_wave\nsites = 8\nk_index = 8\n")
          .diagnostics,
      4, "`k_index` must be below `sites`"));
  // pair indices must fit the register and differ.
  CHECK(has_message(
      parse_config("experiment = bcs\neps = 0.5\npairs = 1:1\n").diagnostics, 3,
      "invalid for"));
  CHECK(has_message(
      parse_config("experiment = bcs\neps = 0.5\nqubits = 3\npairs = 1:4\n")
          .diagnostics,
      4, "invalid for"));
  CHECK(has_message(
      parse_config("experiment = bcs\neps = 0.5\npairs = 1-2\n").diagnostics, 3,
      "expected `a:b"));
}

TEST_CASE("gate_e_tau_prefers_explicit_angle") {
  SimConfig c;
  c.eps = 3.0;
  c.delta = Complex{0.0, 4.0};
  c.tau = 0.1;
  CHECK(c.gate_e_tau() == doctest::Approx(0.5).epsilon(1e-15));
  c.e_tau = 0.25;
  CHECK(c.gate_e_tau() == 0.25);
}

TEST_CASE("format_g17_round_trips") {
  for (double v : {0.0, -0.0, 1.0 / 3.0, 0.1, -1e300, 5e-324, 123456789.123456789,
                   0.7071067811865476}) {
    const std::string s = format_g17(v);
    const double back = std::strtod(s.c_str(), nullptr);
    CHECK(back == v);
    CHECK(std::signbit(back) == std::signbit(v));
  }
}

TEST_CASE("emit_snapshot_round_trip_is_bit_exact") {
  const fs::path dir = fresh_dir("qlg-test-emit");
  RunReport r;
  r.experiment = "dirac1d";
  r.seed = 7;
  r.has_snapshot = true;
  r.snapshot = awkward_field();
  emit(r, dir.string(), OutputFormat::Csv);

  const SpinorField back = read_snapshot((dir / "snapshot.csv").string());
  REQUIRE(back.sites() == 3);
  for (int x = 0; x < 3; ++x)
    for (int c = 0; c < 4; ++c) {
      CHECK(back.at(x, c).real() == r.snapshot.at(x, c).real());
      CHECK(back.at(x, c).imag() == r.snapshot.at(x, c).imag());
    }

  // The header row names all eight amplitude columns.
  const std::string csv = read_bytes(dir / "snapshot.csv");
  CHECK(csv.rfind("re_L_up,im_L_up,re_L_dn,im_L_dn,re_R_up,im_R_up,re_R_dn,im_R_dn\n",
                  0) == 0);
  fs::remove_all(dir);
}

TEST_CASE("emit_writes_report_json_with_fixed_fields") {
  const fs::path dir = fresh_dir("qlg-test-json");
  RunReport r;
  r.experiment = "bcs";
  r.seed = 42;
  r.parameters = {{"qubits", "2"}, {"e_tau", "0.5"}};
  r.series_columns = {"step", "norm"};
  r.series = {{0.0, 1.0}, {1.0, 1.0}};
  r.checks.push_back({"norm_drift", 1.5e-16, 1e-12, true});
  emit(r, dir.string(), OutputFormat::Csv);

  const auto j = nlohmann::json::parse(read_bytes(dir / "report.json"));
  CHECK(j["experiment"] == "bcs");
  CHECK(j["seed"] == 42);
  CHECK(j["rng"] == "splitmix64");
  CHECK(j["parameters"]["qubits"] == "2");
  CHECK(!j.contains("threads"));
  CHECK(!j["parameters"].contains("threads"));
  REQUIRE(j["checks"].size() == 1);
  CHECK(j["checks"][0]["name"] == "norm_drift");
  CHECK(j["checks"][0]["residual"] == 1.5e-16);
  CHECK(j["checks"][0]["tolerance"] == 1e-12);
  CHECK(j["checks"][0]["pass"] == true);
  CHECK(j["status"] == "ok");
  CHECK(j["files"] == nlohmann::json::array({"timeseries.csv"}));

  const std::string series = read_bytes(dir / "timeseries.csv");
  CHECK(series.rfind("step,norm\n", 0) == 0);

  // Status degrades to verification_failed on a failing check, and to error
  // when the run itself broke.
  r.checks.push_back({"other", 2.0, 1.0, false});
  emit(r, dir.string(), OutputFormat::Csv);
  CHECK(nlohmann::json::parse(read_bytes(dir / "report.json"))["status"] ==
        "verification_failed");
  r.errors.push_back("boom");
  emit(r, dir.string(), OutputFormat::Csv);
  CHECK(nlohmann::json::parse(read_bytes(dir / "report.json"))["status"] ==
        "error");
  fs::remove_all(dir);
}

TEST_CASE("emit_json_format_embeds_everything") {
  const fs::path dir = fresh_dir("qlg-test-jsonfmt");
  RunReport r;
  r.experiment = "dirac1d";
  r.seed = 3;
  r.series_columns = {"step"};
  r.series = {{0.0}};
  r.has_snapshot = true;
  r.snapshot = SpinorField(2, Complex{0.5, 0.0});
  emit(r, dir.string(), OutputFormat::Json);

  CHECK(!fs::exists(dir / "timeseries.csv"));
  CHECK(!fs::exists(dir / "snapshot.csv"));
  const auto j = nlohmann::json::parse(read_bytes(dir / "report.json"));
  CHECK(j["series_columns"] == nlohmann::json::array({"step"}));
  CHECK(j["snapshot"].size() == 2);
  CHECK(j["snapshot"][0].size() == 8);
  fs::remove_all(dir);
}

TEST_CASE("run_dirac1d_produces_series_checks_and_snapshot") {
  SimConfig cfg;
  cfg.experiment = Experiment::Dirac1d;
  cfg.sites = 8;
  cfg.steps = 5;
  cfg.m_tau = 0.4;
  cfg.seed = 11;
  const RunOutcome out = run(cfg);
  CHECK(out.exit_code == kExitOk);
  CHECK(out.report.experiment == "dirac1d");
  CHECK(out.report.series_columns ==
        std::vector<std::string>{"step", "norm", "energy"});
  CHECK(out.report.series.size() == 6);  // includes the initial row
  CHECK(out.report.has_snapshot);
  CHECK(out.report.snapshot.sites() == 8);
  CHECK(out.report.all_checks_pass());
}

TEST_CASE("run_dispersion_always_carries_a_residual_column") {
  SimConfig cfg;
  cfg.experiment = Experiment::Dispersion;
  cfg.sites = 16;
  cfg.m_tau = 0.5;
  const RunOutcome out = run(cfg);
  CHECK(out.exit_code == kExitOk);
  CHECK(out.report.dispersion.size() == 16);
  REQUIRE(out.report.dispersion_extra.size() == 16);
  bool found = false;
  for (const auto& c : out.report.dispersion_extra_columns)
    if (c == "residual") found = true;
  CHECK(found);
  CHECK(out.report.all_checks_pass());

  // k_points overrides the grid size.
  cfg.k_points = 7;
  CHECK(run(cfg).report.dispersion.size() == 7);
}

TEST_CASE("run_superfluid_gap_overflow_exits_with_verification_failure") {
  SimConfig cfg;
  cfg.experiment = Experiment::Superfluid;
  cfg.sites = 8;
  cfg.steps = 5;
  cfg.lambda = 1e6;
  cfg.pairing_mode = PairingMode::Local;
  cfg.seed = 5;
  const RunOutcome out = run(cfg);
  CHECK(out.exit_code == kExitVerifyFail);
  CHECK(!out.report.errors.empty());
  CHECK(out.report.errors.front().find("gap overflow") != std::string::npos);
}

TEST_CASE("run_and_emit_is_deterministic_across_thread_counts") {
  SimConfig cfg;
  cfg.experiment = Experiment::Superfluid;
  cfg.sites = 16;
  cfg.steps = 10;
  cfg.lambda = 0.5;
  cfg.pairing_mode = PairingMode::Local;
  cfg.seed = 21;

  const fs::path d1 = fresh_dir("qlg-test-t1");
  const fs::path d4 = fresh_dir("qlg-test-t4");
  const RunOutcome a = run_and_emit(cfg, 1, d1.string());
  const RunOutcome b = run_and_emit(cfg, 4, d4.string());
  CHECK(a.exit_code == kExitOk);
  CHECK(b.exit_code == kExitOk);
  for (const char* name : {"report.json", "timeseries.csv", "snapshot.csv"}) {
    REQUIRE(fs::exists(d1 / name));
    CHECK(read_bytes(d1 / name) == read_bytes(d4 / name));
  }
  fs::remove_all(d1);
  fs::remove_all(d4);
}

TEST_CASE("run_bcs_and_bdg_small_registers") {
  SimConfig cfg;
  cfg.experiment = Experiment::Bcs;
  cfg.qubits = 2;
  cfg.steps = 20;
  cfg.eps = 0.3;
  cfg.delta = Complex{0.2, 0.1};
  cfg.pairs = {{1, 2}};
  cfg.seed = 31;
  const RunOutcome bcs = run(cfg);
  CHECK(bcs.exit_code == kExitOk);
  CHECK(bcs.report.all_checks_pass());

  cfg.experiment = Experiment::Bdg;
  const RunOutcome bdg = run(cfg);
  CHECK(bdg.exit_code == kExitOk);
  CHECK(bdg.report.all_checks_pass());
  CHECK(bdg.report.has_snapshot);
}

TEST_CASE("run_trotter_compare_converges_but_never_reaches_tolerance") {
  SimConfig cfg;
  cfg.experiment = Experiment::TrotterCompare;
  cfg.k_ell = 0.5;
  cfg.m_tau = 0.5;
  cfg.steps = 64;
  cfg.n_max = 32;
  const RunOutcome out = run(cfg);
  CHECK(out.exit_code == kExitOk);
  REQUIRE(!out.report.series.empty());
  // Columns: n, split error, factored-product error.
  CHECK(out.report.series_columns.size() == 3);
  const auto& rows = out.report.series;
  for (std::size_t i = 1; i < rows.size(); ++i)
    CHECK(rows[i][1] < rows[i - 1][1]);
  CHECK(rows.back()[1] > 1e-6);
  for (const auto& row : rows) CHECK(row[2] < 1e-12);
  CHECK(out.report.all_checks_pass());
}
