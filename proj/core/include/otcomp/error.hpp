#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace otcomp {

enum class ErrorCode {
  kUnknownMethod,
  kUnknownAttribute,
  kUndefinedObservation,
  kInvalidSpec,
  kBoundsTooSmall,
  kBoundsExceeded,
  kInvalidBounds,
  kNotAdmissible,
  kNameClash,
  kComponentMismatch,
  kMissingCrossTable,
  kNotDisjoint,
  kTooManyPermutations,
  kInvalidScenario,
  kInvalidLiteral,
  kParseError,
  kUnknownComponent,
};

std::string_view to_string(ErrorCode code);

/// All library failures are reported through this exception type.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Parse failure in a composition expression; `position` is a 0-based offset.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : Error(ErrorCode::kParseError, "at " + std::to_string(position) + ": " + what),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace otcomp
