#include "tilingsg/error.hpp"

namespace tilingsg {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::IncompatibleOverlap: return "IncompatibleOverlap";
    case ErrorCode::InvalidPatch: return "InvalidPatch";
    case ErrorCode::InvalidWindow: return "InvalidWindow";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::MalformedRule: return "MalformedRule";
    case ErrorCode::NotPrimitive: return "NotPrimitive";
    case ErrorCode::DepthTooLarge: return "DepthTooLarge";
    case ErrorCode::NoSeed: return "NoSeed";
    case ErrorCode::NoSaturation: return "NoSaturation";
    case ErrorCode::TileNotInPatch: return "TileNotInPatch";
    case ErrorCode::NotConnected: return "NotConnected";
    case ErrorCode::NotAdmissible: return "NotAdmissible";
    case ErrorCode::NotInDomain: return "NotInDomain";
    case ErrorCode::InsufficientWindow: return "InsufficientWindow";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::NotIdempotent: return "NotIdempotent";
    case ErrorCode::DomainViolation: return "DomainViolation";
    case ErrorCode::UniverseTooSmall: return "UniverseTooSmall";
    case ErrorCode::NotComposable: return "NotComposable";
    case ErrorCode::ZeroProduct: return "ZeroProduct";
  }
  return "Unknown";
}

}  // namespace tilingsg
