#pragma once

// Experiment drivers behind the CLI. run() never calls exit(): it returns the
// report plus the process exit code (0 ok, 2 verification failure) and the
// caller decides what to do with them.

#include "qlg/config.hpp"
#include "qlg/report.hpp"

namespace qlg {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitVerifyFail = 2;

struct RunOutcome {
  RunReport report;
  int exit_code = kExitOk;
};

/// Execute one experiment. `threads` splits site loops only; it never changes
/// any numerical result and is deliberately absent from the report.
RunOutcome run(const SimConfig& cfg, int threads = 1);

/// run() + emit() into cfg.out_dir (or `out_dir_override` when non-empty).
RunOutcome run_and_emit(const SimConfig& cfg, int threads = 1,
                        const std::string& out_dir_override = "");

}  // namespace qlg
