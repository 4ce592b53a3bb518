#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace toric::cli {

enum ExitCode : int {
  ok = 0,
  syntax_error = 2,
  semantic_error = 3,
  usage_error = 64,
  internal_error = 70,
  io_error = 74,
};

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace toric::cli
