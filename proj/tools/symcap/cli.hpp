#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace symcap::cli {

/// Process exit codes.
enum ExitCode : int {
  kSuccess = 0,
  kInputError = 1,
  kBudgetDegraded = 2,
  kAuditFailed = 3,
};

enum class Command { kAlpha, kBounds, kVerifyC5, kSearch, kOracleCheck };

enum class Format { kJson, kCsv };

struct RunConfig {
  Command command = Command::kAlpha;
  /// Named family ("c5", "complete:3", "petersen", ...) or a file path.
  std::string graph = "c5";
  bool graph_given = false;
  std::uint32_t k_first = 1;
  std::uint32_t k_last = 1;
  bool k_given = false;
  std::uint64_t max_nodes = 100'000'000;
  double max_seconds = 600.0;
  std::uint64_t seed = 0;
  std::uint64_t iterations = 1000;
  Format format = Format::kJson;
  std::optional<std::string> out;
  unsigned threads = 1;
  /// verify-c5 test hook.
  bool inject_fault = false;
};

/// Parses "a..b" (inclusive) or a single "n". Throws InvalidArgument.
std::pair<std::uint32_t, std::uint32_t> parse_k_range(const std::string& text);

/// Runs the command-line tool; args excludes the program name. Results go
/// to `out` unless --out names a file, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace symcap::cli
