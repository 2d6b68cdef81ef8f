#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tilingsg {

enum class ErrorCode {
  IncompatibleOverlap,
  InvalidPatch,
  InvalidWindow,
  ParseError,
  MalformedRule,
  NotPrimitive,
  DepthTooLarge,
  NoSeed,
  NoSaturation,
  TileNotInPatch,
  NotConnected,
  NotAdmissible,
  NotInDomain,
  InsufficientWindow,
  BudgetExceeded,
  NotIdempotent,
  DomainViolation,
  UniverseTooSmall,
  NotComposable,
  ZeroProduct,
};

std::string_view error_code_name(ErrorCode code);

class TilingError : public std::runtime_error {
 public:
  TilingError(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace tilingsg
