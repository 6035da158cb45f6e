#include "qlg/report.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace qlg {

using ordered_json = nlohmann::ordered_json;

bool RunReport::all_checks_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return errors.empty();
}

std::string format_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << content;
}

std::string csv_row(const std::vector<std::string>& cells) {
  std::string row;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) row += ',';
    row += cells[i];
  }
  row += '\n';
  return row;
}

const std::vector<std::string> kSnapshotColumns = {
    "re_L_up", "im_L_up", "re_L_dn", "im_L_dn",
    "re_R_up", "im_R_up", "re_R_dn", "im_R_dn"};

std::string snapshot_csv(const SpinorField& f) {
  std::string out = csv_row(kSnapshotColumns);
  for (int x = 0; x < f.sites(); ++x) {
    std::vector<std::string> cells;
    cells.reserve(8);
    for (int c = 0; c < 4; ++c) {
      cells.push_back(format_g17(f.at(x, c).real()));
      cells.push_back(format_g17(f.at(x, c).imag()));
    }
    out += csv_row(cells);
  }
  return out;
}

std::string series_csv(const RunReport& r) {
  std::string out = csv_row(r.series_columns);
  for (const auto& row : r.series) {
    std::vector<std::string> cells;
    cells.reserve(row.size());
    for (double v : row) cells.push_back(format_g17(v));
    out += csv_row(cells);
  }
  return out;
}

std::string dispersion_csv(const RunReport& r) {
  std::vector<std::string> header = {"k_ell", "omega_tau_1", "omega_tau_2",
                                     "omega_tau_3", "omega_tau_4", "p_eff_ell",
                                     "solver_ok"};
  for (const auto& c : r.dispersion_extra_columns) header.push_back(c);
  std::string out = csv_row(header);
  for (std::size_t i = 0; i < r.dispersion.size(); ++i) {
    const auto& rec = r.dispersion[i];
    std::vector<std::string> cells = {format_g17(rec.k_ell)};
    for (double w : rec.omega_tau) cells.push_back(format_g17(w));
    cells.push_back(format_g17(rec.p_eff_ell));
    cells.push_back(rec.solver_ok ? "1" : "0");
    if (i < r.dispersion_extra.size())
      for (std::size_t j = 0; j < r.dispersion_extra_columns.size(); ++j)
        cells.push_back(format_g17(r.dispersion_extra[i][j]));
    out += csv_row(cells);
  }
  return out;
}

}  // namespace

void emit(const RunReport& report, const std::string& dir, OutputFormat format) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);

  ordered_json j;
  j["experiment"] = report.experiment;
  j["seed"] = report.seed;
  j["rng"] = "splitmix64";
  ordered_json params = ordered_json::object();
  for (const auto& [k, v] : report.parameters) params[k] = v;
  j["parameters"] = params;

  std::vector<std::string> files;
  const bool csv = format == OutputFormat::Csv;

  if (!report.series.empty()) {
    if (csv) {
      write_file(fs::path(dir) / "timeseries.csv", series_csv(report));
      files.push_back("timeseries.csv");
    } else {
      j["series_columns"] = report.series_columns;
      j["series"] = report.series;
    }
  }
  if (!report.dispersion.empty()) {
    if (csv) {
      write_file(fs::path(dir) / "dispersion.csv", dispersion_csv(report));
      files.push_back("dispersion.csv");
    } else {
      ordered_json rows = ordered_json::array();
      for (std::size_t i = 0; i < report.dispersion.size(); ++i) {
        const auto& rec = report.dispersion[i];
        ordered_json row;
        row["k_ell"] = rec.k_ell;
        row["omega_tau"] = rec.omega_tau;
        row["p_eff_ell"] = rec.p_eff_ell;
        row["solver_ok"] = rec.solver_ok;
        if (i < report.dispersion_extra.size())
          for (std::size_t c = 0; c < report.dispersion_extra_columns.size(); ++c)
            row[report.dispersion_extra_columns[c]] = report.dispersion_extra[i][c];
        rows.push_back(row);
      }
      j["dispersion"] = rows;
    }
  }
  if (report.has_snapshot) {
    if (csv) {
      write_file(fs::path(dir) / "snapshot.csv", snapshot_csv(report.snapshot));
      files.push_back("snapshot.csv");
    } else {
      ordered_json rows = ordered_json::array();
      for (int x = 0; x < report.snapshot.sites(); ++x) {
        ordered_json row = ordered_json::array();
        for (int c = 0; c < 4; ++c) {
          row.push_back(report.snapshot.at(x, c).real());
          row.push_back(report.snapshot.at(x, c).imag());
        }
        rows.push_back(row);
      }
      j["snapshot_columns"] = kSnapshotColumns;
      j["snapshot"] = rows;
    }
  }

  if (csv) j["files"] = files;

  ordered_json checks = ordered_json::array();
  for (const auto& c : report.checks) {
    ordered_json row;
    row["name"] = c.name;
    row["residual"] = c.residual;
    row["tolerance"] = c.tolerance;
    row["pass"] = c.pass;
    checks.push_back(row);
  }
  j["checks"] = checks;
  j["errors"] = report.errors;
  j["status"] = report.errors.empty()
                    ? (report.all_checks_pass() ? "ok" : "verification_failed")
                    : "error";

  write_file(fs::path(dir) / "report.json", j.dump(2) + "\n");
}

SpinorField read_snapshot(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::string line;
  if (!std::getline(in, line))
    throw std::runtime_error("empty snapshot file " + path);

  std::vector<std::array<double, 8>> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::array<double, 8> vals{};
    std::size_t pos = 0;
    for (int c = 0; c < 8; ++c) {
      const auto next = line.find(',', pos);
      const std::string cell =
          line.substr(pos, next == std::string::npos ? next : next - pos);
      vals[c] = std::strtod(cell.c_str(), nullptr);
      if (next == std::string::npos && c < 7)
        throw std::runtime_error("short row in " + path);
      pos = next + 1;
    }
    rows.push_back(vals);
  }
  if (rows.empty()) throw std::runtime_error("no data rows in " + path);

  SpinorField f(static_cast<int>(rows.size()));
  for (int x = 0; x < f.sites(); ++x)
    for (int c = 0; c < 4; ++c)
      f.at(x, c) = Complex{rows[x][2 * c], rows[x][2 * c + 1]};
  return f;
}

}  // namespace qlg
