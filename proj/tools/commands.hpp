#pragma once

#include <optional>
#include <ostream>
#include <string>

namespace momsolve::cli {

/// Exit codes shared by all subcommands:
///   0  success (solve found a measure, verify passed, synth wrote moments)
///   1  bad input (unreadable file, malformed JSON, schema violation)
///   2  negative result (no representing measure, verification failed)
///   3  pipeline diagnostic (internal inconsistency, numerical failure)
inline constexpr int kExitSuccess = 0;
inline constexpr int kExitBadInput = 1;
inline constexpr int kExitNoMeasure = 2;
inline constexpr int kExitDiagnostic = 3;

struct SolveOptions {
  std::string problem_path;
  std::optional<double> tol;  // overrides the file's "tol", default 1e-9
  bool certificate = false;
  bool exact = false;  // certificate entries as "p/q" strings
};

struct VerifyOptions {
  std::string problem_path;
  std::string measure_path;
  std::optional<double> tol;
};

struct SynthOptions {
  std::string measure_path;
};

/// Each command writes machine-readable JSON to `out` and human-readable
/// diagnostics to `err`, and returns one of the exit codes above.
int cmd_solve(const SolveOptions& opt, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err);
int cmd_synth(const SynthOptions& opt, std::ostream& out, std::ostream& err);

}  // namespace momsolve::cli
