#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace toric {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Vectors or matrices of incompatible sizes.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A fan that fails structural validation. Carries every violation found.
class FanError : public Error {
 public:
  explicit FanError(std::vector<std::string> violations);
  const std::vector<std::string>& violations() const { return violations_; }

 private:
  std::vector<std::string> violations_;
};

/// An operation was called on input that does not satisfy one of its
/// hypotheses (smooth, complete, projective, ...). `hypothesis()` names it.
class PreconditionError : public Error {
 public:
  PreconditionError(std::string hypothesis, const std::string& detail);
  const std::string& hypothesis() const { return hypothesis_; }

 private:
  std::string hypothesis_;
};

/// Internal invariant broken. Never caused by valid input.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace toric
