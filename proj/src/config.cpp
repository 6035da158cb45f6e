#include "qlg/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <map>
#include <sstream>

namespace qlg {

const char* to_string(Experiment e) {
  switch (e) {
    case Experiment::Dirac1d: return "dirac1d";
    case Experiment::Dispersion: return "dispersion";
    case Experiment::Bcs: return "bcs";
    case Experiment::Bdg: return "bdg";
    case Experiment::Superfluid: return "superfluid";
    case Experiment::Verify: return "verify";
    case Experiment::TrotterCompare: return "trotter-compare";
  }
  return "verify";
}

std::optional<Experiment> experiment_from_string(const std::string& s) {
  static const std::map<std::string, Experiment> names = {
      {"dirac1d", Experiment::Dirac1d},
      {"dispersion", Experiment::Dispersion},
      {"bcs", Experiment::Bcs},
      {"bdg", Experiment::Bdg},
      {"superfluid", Experiment::Superfluid},
      {"verify", Experiment::Verify},
      {"trotter-compare", Experiment::TrotterCompare},
  };
  const auto it = names.find(s);
  if (it == names.end()) return std::nullopt;
  return it->second;
}

double SimConfig::gate_e_tau() const {
  if (e_tau >= 0.0) return e_tau;
  return std::sqrt(eps * eps + std::norm(delta)) * tau;
}

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  auto e = s.find_last_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return s.substr(b, e - b + 1);
}

struct Entry {
  int line;
  std::string value;
};

bool parse_double(const std::string& s, double& out) {
  try {
    std::size_t pos = 0;
    out = std::stod(s, &pos);
    return pos == s.size();
  } catch (...) {
    return false;
  }
}

bool parse_int(const std::string& s, long long& out) {
  const char* b = s.data();
  const char* e = b + s.size();
  auto [p, ec] = std::from_chars(b, e, out);
  return ec == std::errc{} && p == e;
}

bool parse_u64(const std::string& s, std::uint64_t& out) {
  const char* b = s.data();
  const char* e = b + s.size();
  auto [p, ec] = std::from_chars(b, e, out);
  return ec == std::errc{} && p == e;
}

}  // namespace

ConfigParseResult parse_config(const std::string& text,
                               std::optional<Experiment> forced_experiment) {
  ConfigParseResult result;
  auto& diags = result.diagnostics;
  std::map<std::string, Entry> entries;

  static const std::vector<std::string> known = {
      "experiment", "sites", "steps", "m_tau", "eps", "delta_re", "delta_im",
      "lambda", "tau", "e_tau", "k_ell", "qubits", "pairs", "pairing_mode",
      "init", "k_index", "k_points", "n_max", "seed", "out_dir", "format",
  };

  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      diags.push_back({lineno, "expected `key = value`, got \"" + trim(raw) + "\""});
      continue;
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) {
      diags.push_back({lineno, "missing key before `=`"});
      continue;
    }
    if (std::find(known.begin(), known.end(), key) == known.end()) {
      diags.push_back({lineno, "unknown key `" + key + "`"});
      continue;
    }
    if (value.empty()) {
      diags.push_back({lineno, "empty value for `" + key + "`"});
      continue;
    }
    if (entries.count(key)) {
      diags.push_back({lineno, "duplicate key `" + key + "` (first on line " +
                                   std::to_string(entries[key].line) + ")"});
      continue;
    }
    entries[key] = {lineno, value};
  }

  SimConfig cfg;
  auto line_of = [&](const std::string& key) {
    const auto it = entries.find(key);
    return it == entries.end() ? 0 : it->second.line;
  };
  auto get_double = [&](const std::string& key, double& field) {
    const auto it = entries.find(key);
    if (it == entries.end()) return;
    if (!parse_double(it->second.value, field))
      diags.push_back({it->second.line,
                       "`" + key + "`: not a number: \"" + it->second.value + "\""});
  };
  auto get_int = [&](const std::string& key, int& field, long long lo, long long hi) {
    const auto it = entries.find(key);
    if (it == entries.end()) return;
    long long v = 0;
    if (!parse_int(it->second.value, v)) {
      diags.push_back({it->second.line,
                       "`" + key + "`: not an integer: \"" + it->second.value + "\""});
      return;
    }
    if (v < lo || v > hi) {
      diags.push_back({it->second.line, "`" + key + "`: " + std::to_string(v) +
                                            " outside [" + std::to_string(lo) +
                                            ", " + std::to_string(hi) + "]"});
      return;
    }
    field = static_cast<int>(v);
  };

  // experiment
  if (forced_experiment) {
    cfg.experiment = *forced_experiment;
  } else if (const auto it = entries.find("experiment"); it != entries.end()) {
    if (auto e = experiment_from_string(it->second.value)) {
      cfg.experiment = *e;
    } else {
      diags.push_back({it->second.line,
                       "`experiment`: unknown value \"" + it->second.value + "\""});
    }
  } else {
    diags.push_back({0, "missing required key `experiment`"});
  }

  get_int("sites", cfg.sites, 2, 1 << 20);
  get_int("steps", cfg.steps, 0, 100000000);
  get_int("qubits", cfg.qubits, 2, 12);
  get_int("k_index", cfg.k_index, 0, 1 << 20);
  get_int("k_points", cfg.k_points, 1, 1 << 20);
  get_int("n_max", cfg.n_max, 1, 1 << 20);
  get_double("m_tau", cfg.m_tau);
  get_double("eps", cfg.eps);
  get_double("lambda", cfg.lambda);
  get_double("tau", cfg.tau);
  get_double("e_tau", cfg.e_tau);
  get_double("k_ell", cfg.k_ell);
  {
    double re = 0.0, im = 0.0;
    get_double("delta_re", re);
    get_double("delta_im", im);
    cfg.delta = {re, im};
  }
  if (const auto it = entries.find("seed"); it != entries.end()) {
    if (!parse_u64(it->second.value, cfg.seed))
      diags.push_back({it->second.line, "`seed`: not a 64-bit unsigned integer"});
  }
  if (const auto it = entries.find("pairing_mode"); it != entries.end()) {
    const auto& v = it->second.value;
    if (v == "uniform") cfg.pairing_mode = PairingMode::Uniform;
    else if (v == "local") cfg.pairing_mode = PairingMode::Local;
    else if (v == "global_mean") cfg.pairing_mode = PairingMode::GlobalMean;
    else diags.push_back({it->second.line,
                          "`pairing_mode`: expected uniform|local|global_mean"});
  }
  if (const auto it = entries.find("init"); it != entries.end()) {
    const auto& v = it->second.value;
    if (v == "random") cfg.init = InitKind::Random;
    else if (v == "plane_wave") cfg.init = InitKind::PlaneWave;
    else if (v == "uniform_condensate") cfg.init = InitKind::UniformCondensate;
    else diags.push_back({it->second.line,
                          "`init`: expected random|plane_wave|uniform_condensate"});
  }
  if (const auto it = entries.find("format"); it != entries.end()) {
    const auto& v = it->second.value;
    if (v == "csv") cfg.format = OutputFormat::Csv;
    else if (v == "json") cfg.format = OutputFormat::Json;
    else diags.push_back({it->second.line, "`format`: expected csv|json"});
  }
  if (const auto it = entries.find("out_dir"); it != entries.end())
    cfg.out_dir = it->second.value;
  if (const auto it = entries.find("pairs"); it != entries.end()) {
    cfg.pairs.clear();
    std::istringstream ps(it->second.value);
    std::string tok;
    bool ok = true;
    while (std::getline(ps, tok, ',')) {
      const auto colon = tok.find(':');
      long long a = 0, b = 0;
      if (colon == std::string::npos || !parse_int(trim(tok.substr(0, colon)), a) ||
          !parse_int(trim(tok.substr(colon + 1)), b)) {
        diags.push_back({it->second.line,
                         "`pairs`: expected `a:b[,c:d...]`, got \"" + tok + "\""});
        ok = false;
        break;
      }
      cfg.pairs.emplace_back(static_cast<int>(a), static_cast<int>(b));
    }
    if (ok && cfg.pairs.empty())
      diags.push_back({it->second.line, "`pairs`: at least one pair required"});
  }

  // Domain checks on dimensionless gate parameters.
  if (cfg.m_tau < 0.0 || cfg.m_tau > 1.0)
    diags.push_back({line_of("m_tau"), "`m_tau` must lie in [0, 1]"});
  if (entries.count("e_tau") && (cfg.e_tau < 0.0 || cfg.e_tau > 1.0))
    diags.push_back({line_of("e_tau"), "`e_tau` must lie in [0, 1]"});
  if (cfg.tau <= 0.0) diags.push_back({line_of("tau"), "`tau` must be positive"});
  if (!(std::abs(cfg.k_ell) <= 3.14159265358979324))
    diags.push_back({line_of("k_ell"), "`k_ell` must lie in [-pi, pi]"});
  for (const auto& [a, b] : cfg.pairs) {
    if (a < 1 || a > cfg.qubits || b < 1 || b > cfg.qubits || a == b) {
      diags.push_back({line_of("pairs"),
                       "`pairs`: (" + std::to_string(a) + ":" + std::to_string(b) +
                           ") invalid for " + std::to_string(cfg.qubits) + " qubits"});
      break;
    }
  }
  if (cfg.experiment == Experiment::Bcs || cfg.experiment == Experiment::Bdg) {
    const double e = std::sqrt(cfg.eps * cfg.eps + std::norm(cfg.delta));
    if (!(e > 0.0))
      diags.push_back({line_of("eps"),
                       "bcs/bdg: quasiparticle energy sqrt(eps^2 + |delta|^2) "
                       "must be positive"});
    if (cfg.gate_e_tau() > 1.0)
      diags.push_back({line_of("tau"),
                       "bcs/bdg: E tau > 1; shrink tau, eps, or delta"});
  }
  if (cfg.experiment == Experiment::Superfluid &&
      std::abs(cfg.delta) * cfg.tau > 1.0)
    diags.push_back({line_of("delta_re"), "superfluid: |delta| tau must be <= 1"});
  if (cfg.experiment == Experiment::TrotterCompare) {
    int n = cfg.n_max;
    while (n > 1 && n % 2 == 0) n /= 2;
    if (n != 1)
      diags.push_back({line_of("n_max"), "`n_max` must be a power of two"});
  }
  if (cfg.init == InitKind::PlaneWave && cfg.k_index >= cfg.sites)
    diags.push_back({line_of("k_index"), "`k_index` must be below `sites`"});

  if (diags.empty()) result.config = cfg;
  std::sort(diags.begin(), diags.end(),
            [](const ConfigDiagnostic& a, const ConfigDiagnostic& b) {
              return a.line < b.line;
            });
  return result;
}

}  // namespace qlg
