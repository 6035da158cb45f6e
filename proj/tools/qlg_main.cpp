#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "qlg/experiments.hpp"
#include "qlg/report.hpp"

namespace {

int resolve_threads(const std::optional<int>& cli_threads) {
  if (cli_threads) return *cli_threads;
  if (const char* env = std::getenv("QLG_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1) {
      std::cerr << "qlg: QLG_THREADS must be a positive integer, got '" << env
                << "'\n";
      return -1;
    }
    return static_cast<int>(v);
  }
  return 1;
}

void print_diagnostics(const std::vector<qlg::ConfigDiagnostic>& diags) {
  for (const auto& d : diags) {
    if (d.line > 0)
      std::cerr << "config:" << d.line << ": " << d.message << "\n";
    else
      std::cerr << "config: " << d.message << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quantum lattice-gas simulation toolkit"};
  app.require_subcommand(0, 1);

  std::string config_path;
  std::string out_dir;
  std::optional<std::uint64_t> seed;
  std::optional<int> threads;
  bool verify_flag = false;

  app.add_option("--config", config_path, "key = value configuration file");
  app.add_option("--out", out_dir, "output directory (overrides config)");
  app.add_option("--seed", seed, "RNG seed (overrides config)");
  app.add_option("--threads", threads,
                 "worker threads for site loops (QLG_THREADS as fallback); "
                 "never changes any numerical result");
  app.add_flag("--verify", verify_flag, "run the full verification suite");

  const std::pair<const char*, qlg::Experiment> subs[] = {
      {"dirac1d", qlg::Experiment::Dirac1d},
      {"dispersion", qlg::Experiment::Dispersion},
      {"bcs", qlg::Experiment::Bcs},
      {"bdg", qlg::Experiment::Bdg},
      {"superfluid", qlg::Experiment::Superfluid},
      {"verify", qlg::Experiment::Verify},
      {"trotter-compare", qlg::Experiment::TrotterCompare},
  };
  std::optional<qlg::Experiment> chosen;
  for (const auto& [name, exp] : subs) {
    CLI::App* s = app.add_subcommand(
        name, std::string("run the ") + name + " experiment");
    s->fallthrough();
    const qlg::Experiment e = exp;
    s->callback([&chosen, e] { chosen = e; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? qlg::kExitOk : qlg::kExitUsage;
  }

  if (verify_flag) {
    if (chosen && *chosen != qlg::Experiment::Verify) {
      std::cerr << "qlg: --verify cannot be combined with another subcommand\n";
      return qlg::kExitUsage;
    }
    chosen = qlg::Experiment::Verify;
  }
  if (!chosen) {
    std::cerr << "qlg: choose a subcommand (see --help) or pass --verify\n";
    return qlg::kExitUsage;
  }

  std::string text;
  if (!config_path.empty()) {
    std::ifstream in(config_path, std::ios::binary);
    if (!in) {
      std::cerr << "qlg: cannot read config file '" << config_path << "'\n";
      return qlg::kExitUsage;
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }

  qlg::ConfigParseResult parsed = qlg::parse_config(text, chosen);
  if (!parsed.config) {
    print_diagnostics(parsed.diagnostics);
    return qlg::kExitUsage;
  }
  qlg::SimConfig cfg = *parsed.config;
  if (seed) cfg.seed = *seed;
  if (!out_dir.empty()) cfg.out_dir = out_dir;

  const int nthreads = resolve_threads(threads);
  if (nthreads < 1) return qlg::kExitUsage;

  qlg::RunOutcome outcome;
  try {
    outcome = qlg::run_and_emit(cfg, nthreads);
  } catch (const std::exception& e) {
    std::cerr << "qlg: " << e.what() << "\n";
    return qlg::kExitUsage;
  }

  const qlg::RunReport& rep = outcome.report;
  int passed = 0;
  for (const auto& c : rep.checks) {
    if (c.pass) ++passed;
    std::printf("[%s] %s  residual=%.3g  tolerance=%.3g\n",
                c.pass ? "PASS" : "FAIL", c.name.c_str(), c.residual,
                c.tolerance);
  }
  for (const auto& e : rep.errors) std::printf("[ERROR] %s\n", e.c_str());
  std::printf("%s: %d/%zu checks passed; outputs in %s\n",
              rep.experiment.c_str(), passed, rep.checks.size(),
              cfg.out_dir.c_str());
  return outcome.exit_code;
}
