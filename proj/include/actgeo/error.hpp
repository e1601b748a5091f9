#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace actgeo {

enum class ErrorCode {
  // algebra
  OutOfRangeEntry,
  NotSquare,
  NotAssociative,
  NoIdentity,
  NotAGroup,
  NotASubgroup,
  // acts
  EmptyCarrier,
  DimensionMismatch,
  IdentityLawViolated,
  CompatibilityViolated,
  MonoidNotGroup,
  MixedMonoids,
  EmptyList,
  SizeBoundExceeded,
  NotEquivariant,
  // congruences and lattices
  NotCompatible,
  CarrierMismatch,
  ArityBoundExceeded,
  // equivalence
  InvalidForm,
  // io
  ParseError,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

}  // namespace actgeo
