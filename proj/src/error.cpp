#include "legendrian/error.hpp"

namespace legendrian {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonIntegralValley: return "NonIntegralValley";
    case ErrorCode::MisplacedValley: return "MisplacedValley";
    case ErrorCode::MultiplicityMismatch: return "MultiplicityMismatch";
    case ErrorCode::WindowEmpty: return "WindowEmpty";
    case ErrorCode::WindowTooShallow: return "WindowTooShallow";
    case ErrorCode::Truncated: return "Truncated";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::NotApplicable: return "NotApplicable";
    case ErrorCode::WrongPeakCount: return "WrongPeakCount";
    case ErrorCode::InvalidSummand: return "InvalidSummand";
    case ErrorCode::InvariantMismatch: return "InvariantMismatch";
    case ErrorCode::UnknownKnot: return "UnknownKnot";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::SchemaError: return "SchemaError";
    case ErrorCode::RangeInvalid: return "RangeInvalid";
  }
  return "Unknown";
}

}  // namespace legendrian
