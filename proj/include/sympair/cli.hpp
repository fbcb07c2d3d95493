#pragma once

#include <optional>
#include <string>

namespace sympair {

inline constexpr const char* kToolName = "sympair";
inline constexpr const char* kToolVersion = "0.1.0";

// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 2;
inline constexpr int kExitBudget = 3;
inline constexpr int kExitPrecondition = 4;

// Command-line flags; each overrides the matching field of the job
// document's options object.
struct CliOverrides {
  std::optional<std::string> format; // "json" or "table"
  std::optional<long long> seed;
  std::optional<long long> budget;
};

struct JobResult {
  int exit_code = kExitOk;
  std::string output; // rendered report or structured error document
};

// Runs one job document.  Never throws: malformed input, budget refusals,
// and precondition failures come back as structured error documents with
// the matching exit code.  Identical (input, seed, version) produce
// byte-identical output.
JobResult run_job(const std::string& input_text, const CliOverrides& overrides = {});

} // namespace sympair
