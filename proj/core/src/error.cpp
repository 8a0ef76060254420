#include "otcomp/error.hpp"

namespace otcomp {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUnknownMethod: return "UnknownMethod";
    case ErrorCode::kUnknownAttribute: return "UnknownAttribute";
    case ErrorCode::kUndefinedObservation: return "UndefinedObservation";
    case ErrorCode::kInvalidSpec: return "InvalidSpec";
    case ErrorCode::kBoundsTooSmall: return "BoundsTooSmall";
    case ErrorCode::kBoundsExceeded: return "BoundsExceeded";
    case ErrorCode::kInvalidBounds: return "InvalidBounds";
    case ErrorCode::kNotAdmissible: return "NotAdmissible";
    case ErrorCode::kNameClash: return "NameClash";
    case ErrorCode::kComponentMismatch: return "ComponentMismatch";
    case ErrorCode::kMissingCrossTable: return "MissingCrossTable";
    case ErrorCode::kNotDisjoint: return "NotDisjoint";
    case ErrorCode::kTooManyPermutations: return "TooManyPermutations";
    case ErrorCode::kInvalidScenario: return "InvalidScenario";
    case ErrorCode::kInvalidLiteral: return "InvalidLiteral";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kUnknownComponent: return "UnknownComponent";
  }
  return "Error";
}

}  // namespace otcomp
