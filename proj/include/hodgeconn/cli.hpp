#pragma once

#include <string>
#include <vector>

namespace hodge {

inline constexpr const char* kVersion = "hodgeconn " HODGECONN_VERSION;

struct CliResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

/// Runs one CLI invocation. args excludes the program name.
/// Exit codes: 0 success, 1 mathematical violation, 2 malformed input.
CliResult run_cli(const std::vector<std::string>& args);

/// Writes the fixture corpus to dir and returns the file names written.
std::vector<std::string> write_fixture_corpus(const std::string& dir);

}  // namespace hodge
