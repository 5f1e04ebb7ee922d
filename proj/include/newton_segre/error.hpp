#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nsegre {

enum class ErrorCode {
  ZeroGenerator,
  DimensionMismatch,
  NegativeCoordinate,
  AmbientTooSmall,
  NonPositiveParameter,
  NonPositiveArgument,
  CutoffTooSmall,
  PrecisionUnreachable,
  DegenerateFacet,
  ParseError,
  InvalidArgument,
  Overflow,
};

std::string_view error_code_name(ErrorCode code) noexcept;

// Every module reports faults through this type. Infeasible / unbounded LPs
// are outcomes, not errors, and never surface here.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Thrown by the ideal parsers; `position` is a 0-based byte offset into the
// input text.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : Error(ErrorCode::ParseError,
              message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace nsegre
