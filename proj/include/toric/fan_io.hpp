#pragma once

// Fan file format:
//   {"rank":2,"rays":[[1,0],[0,1],[-1,-1]],"max_cones":[[0,1],[1,2],[0,2]]}
// Integers are decimal and arbitrary precision.

#include <cstddef>
#include <string>
#include <string_view>

#include "toric/error.hpp"
#include "toric/fan.hpp"

namespace toric {

/// Malformed text: JSON syntax or a document not matching the fan schema.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column);
  /// 1-based; 0 when the error concerns document structure, not a position.
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Parses without semantic validation.
Fan parse_fan_unchecked(std::string_view text);

/// Parses and validates; throws ParseError or FanError.
Fan parse_fan(std::string_view text);

/// Rays sorted lexicographically, cones as sorted index sets in
/// lexicographic order.
Fan canonicalize(const Fan& fan);

/// Canonical single-line text, no trailing newline.
std::string serialize_fan(const Fan& fan);

}  // namespace toric
