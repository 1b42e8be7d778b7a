#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "eulersym/cli/report.hpp"

namespace eulersym::cli {

enum ExitCode : int { kSuccess = 0, kPropertyFailure = 1, kUsageError = 2 };

struct Request {
  std::string command;
  std::string input_text;
  std::uint64_t seed = 0;
  std::optional<int> trials;
  int degree = 2;
  std::size_t samples = 0;
  std::optional<std::string> points_text;
};

struct Outcome {
  Report report;
  int exit_code = kSuccess;
};

/// Names accepted by execute().
const std::vector<std::string>& command_names();

/// Runs one command on already-loaded input. Throws ParseError for malformed input and
/// Error for unknown commands; module failures are reported in the returned Outcome.
Outcome execute(const Request& request);

/// Entry point of the `eulersym` executable.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace eulersym::cli
