#include "grasslab/error.hpp"

namespace grasslab {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::AmbientMismatch: return "AmbientMismatch";
    case ErrorCode::DimMismatch: return "DimMismatch";
    case ErrorCode::EmptySet: return "EmptySet";
    case ErrorCode::ParamOutOfRange: return "ParamOutOfRange";
    case ErrorCode::Unsupported: return "Unsupported";
    case ErrorCode::CharTwo: return "CharTwo";
    case ErrorCode::NotABaseSubset: return "NotABaseSubset";
    case ErrorCode::AmbiguousMatch: return "AmbiguousMatch";
    case ErrorCode::DegenerateParams: return "DegenerateParams";
    case ErrorCode::NotSelfDualLayer: return "NotSelfDualLayer";
    case ErrorCode::NotOppositeClosed: return "NotOppositeClosed";
    case ErrorCode::NotInduced: return "NotInduced";
    case ErrorCode::BadInput: return "BadInput";
  }
  return "Unknown";
}

}  // namespace grasslab
