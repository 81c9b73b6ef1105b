#include "invsg/errors.hpp"

namespace invsg {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::PointOutOfRange: return "PointOutOfRange";
    case ErrorCode::NotAPartialBijection: return "NotAPartialBijection";
    case ErrorCode::BoundExceeded: return "BoundExceeded";
    case ErrorCode::InvalidTable: return "InvalidTable";
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::NotRegular: return "NotRegular";
    case ErrorCode::IdempotentsDoNotCommute: return "IdempotentsDoNotCommute";
    case ErrorCode::BadZero: return "BadZero";
    case ErrorCode::BadOne: return "BadOne";
    case ErrorCode::NotIdempotent: return "NotIdempotent";
    case ErrorCode::NoZero: return "NoZero";
    case ErrorCode::NotAMonoid: return "NotAMonoid";
    case ErrorCode::NotAHomomorphism: return "NotAHomomorphism";
    case ErrorCode::NotACongruence: return "NotACongruence";
    case ErrorCode::NotAnIdeal: return "NotAnIdeal";
    case ErrorCode::TargetNotAGroup: return "TargetNotAGroup";
    case ErrorCode::NotBoolean: return "NotBoolean";
    case ErrorCode::NotFundamental: return "NotFundamental";
    case ErrorCode::NotBelow: return "NotBelow";
    case ErrorCode::NotOrthogonal: return "NotOrthogonal";
    case ErrorCode::NoJoin: return "NoJoin";
    case ErrorCode::FrinkViolation: return "FrinkViolation";
    case ErrorCode::NotABand: return "NotABand";
    case ErrorCode::NotCommutative: return "NotCommutative";
    case ErrorCode::InvalidGroupoid: return "InvalidGroupoid";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, std::string const& what)
    : std::runtime_error(what), code_(code) {}

void fail(ErrorCode code, std::string const& detail) {
  throw Error(code, std::string(to_string(code)) + ": " + detail);
}

}  // namespace invsg
