#include "toric/error.hpp"

namespace toric {

namespace {

std::string join_violations(const std::vector<std::string>& violations) {
  std::string out = "invalid fan";
  for (const auto& v : violations) {
    out += "; ";
    out += v;
  }
  return out;
}

}  // namespace

FanError::FanError(std::vector<std::string> violations)
    : Error(join_violations(violations)), violations_(std::move(violations)) {}

PreconditionError::PreconditionError(std::string hypothesis, const std::string& detail)
    : Error("hypothesis '" + hypothesis + "' failed: " + detail), hypothesis_(std::move(hypothesis)) {}

}  // namespace toric
