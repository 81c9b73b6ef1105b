// Error reporting for the invsg library.
//
// Every failure that a caller can act on is thrown as invsg::Error carrying
// an ErrorCode; internal consistency failures (a theorem cross-check that
// disagrees) are thrown as invsg::InvariantViolation.

#ifndef INVSG_ERRORS_HPP_
#define INVSG_ERRORS_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace invsg {

enum class ErrorCode {
  DegreeMismatch,
  PointOutOfRange,
  NotAPartialBijection,
  BoundExceeded,
  InvalidTable,
  NotAssociative,
  NotRegular,
  IdempotentsDoNotCommute,
  BadZero,
  BadOne,
  NotIdempotent,
  NoZero,
  NotAMonoid,
  NotAHomomorphism,
  NotACongruence,
  NotAnIdeal,
  TargetNotAGroup,
  NotBoolean,
  NotFundamental,
  NotBelow,
  NotOrthogonal,
  NoJoin,
  FrinkViolation,
  NotABand,
  NotCommutative,
  InvalidGroupoid,
  ParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string const& what);

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Raised when two independent computations of the same mathematical object
// disagree. Seeing one means a bug, not bad input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

[[noreturn]] void fail(ErrorCode code, std::string const& detail);

inline void require(bool condition, ErrorCode code, std::string const& detail) {
  if (!condition) {
    fail(code, detail);
  }
}

inline void ensure(bool condition, std::string const& what) {
  if (!condition) {
    throw InvariantViolation(what);
  }
}

}  // namespace invsg

#endif  // INVSG_ERRORS_HPP_
