#pragma once

// Run outputs. CSV files carry a header row and floats printed at 17
// significant digits so parsing them back is bit-exact; report.json keys are
// emitted in a fixed order so identical runs are byte-identical.

#include <cstdint>
#include <string>
#include <vector>

#include "qlg/config.hpp"
#include "qlg/dirac.hpp"

namespace qlg {

struct CheckResult {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct RunReport {
  std::string experiment;
  std::uint64_t seed = 0;
  std::vector<std::pair<std::string, std::string>> parameters;  // ordered echo

  std::vector<std::string> series_columns;
  std::vector<std::vector<double>> series;

  std::vector<DispersionRecord> dispersion;
  std::vector<std::array<double, 4>> dispersion_extra;  // per-record residual columns
  std::vector<std::string> dispersion_extra_columns;

  bool has_snapshot = false;
  SpinorField snapshot{1};

  std::vector<CheckResult> checks;
  std::vector<std::string> errors;

  bool all_checks_pass() const;
};

/// Print a double with 17 significant digits (round-trip exact).
std::string format_g17(double v);

/// Write report.json plus, in csv format, timeseries.csv / dispersion.csv /
/// snapshot.csv as applicable. Creates `dir` if needed.
void emit(const RunReport& report, const std::string& dir, OutputFormat format);

/// Parse a snapshot.csv written by emit back into a field (bit-exact round trip).
SpinorField read_snapshot(const std::string& path);

}  // namespace qlg
