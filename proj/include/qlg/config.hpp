#pragma once

// Flat `key = value` run configuration. Parsing never stops at the first
// problem: every violation is reported with its line number so a bad file is
// fixed in one pass.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qlg/matrix.hpp"
#include "qlg/superfluid.hpp"

namespace qlg {

enum class Experiment {
  Dirac1d,
  Dispersion,
  Bcs,
  Bdg,
  Superfluid,
  Verify,
  TrotterCompare,
};

const char* to_string(Experiment e);
std::optional<Experiment> experiment_from_string(const std::string& s);

enum class OutputFormat { Csv, Json };
enum class InitKind { Random, PlaneWave, UniformCondensate };

struct SimConfig {
  Experiment experiment = Experiment::Verify;

  // lattice
  int sites = 64;
  int steps = 100;

  // physics
  double m_tau = 0.0;
  double eps = 0.0;
  Complex delta{0.0, 0.0};
  double lambda = 0.0;
  double tau = 1.0;
  double e_tau = -1.0;  // pair-gate angle; < 0 means derive from eps/delta/tau
  double k_ell = 0.5;   // trotter-compare wavenumber
  int qubits = 4;
  std::vector<std::pair<int, int>> pairs{{1, 2}};
  PairingMode pairing_mode = PairingMode::GlobalMean;

  // mode flags
  InitKind init = InitKind::Random;
  int k_index = 1;   // plane-wave initial mode
  int k_points = 0;  // dispersion grid size; 0 means use `sites`
  int n_max = 256;   // trotter-compare largest slice count (power of two)

  std::uint64_t seed = 1;

  // output
  std::string out_dir = "out";
  OutputFormat format = OutputFormat::Csv;

  double gate_e_tau() const;  // e_tau if set, else E(eps, delta) * tau
};

struct ConfigDiagnostic {
  int line = 0;  // 0 for violations not tied to a single line
  std::string message;
};

struct ConfigParseResult {
  std::optional<SimConfig> config;  // set iff diagnostics is empty
  std::vector<ConfigDiagnostic> diagnostics;
};

/// Parse and validate. `forced_experiment` (from a CLI subcommand) both fills a
/// missing `experiment` key and overrides a present one.
ConfigParseResult parse_config(const std::string& text,
                               std::optional<Experiment> forced_experiment = {});

}  // namespace qlg
