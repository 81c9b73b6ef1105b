// Invariant suites run by `isg check`.

#ifndef INVSG_CHECKS_HPP_
#define INVSG_CHECKS_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "invsg/semigroup.hpp"

namespace invsg {

enum class CheckStatus { Pass, Fail, Skip };

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;
};

//! Suites: "orders", "congruences", "duality", or "all". Throws ParseError
//! for an unknown suite name. Errors inside a check are reported as failures.
std::vector<CheckResult> run_suite(SemigroupPtr const& s, std::string_view suite);

}  // namespace invsg

#endif  // INVSG_CHECKS_HPP_
