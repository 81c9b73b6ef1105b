// Summary of a finite inverse semigroup, as printed by `isg analyze`.

#ifndef INVSG_REPORT_HPP_
#define INVSG_REPORT_HPP_

#include <cstddef>
#include <optional>
#include <string>

#include "invsg/predicates.hpp"
#include "invsg/semigroup.hpp"

namespace invsg {

struct AnalysisReport {
  std::size_t    order       = 0;
  std::size_t    idempotents = 0;
  bool           has_zero    = false;
  bool           is_monoid   = false;
  PropertyReport properties;
  std::optional<bool> is_boolean;       // monoids with zero
  std::optional<bool> congruence_free;  // with zero, at least two elements
  std::size_t    l_classes = 0;
  std::size_t    r_classes = 0;
  std::size_t    h_classes = 0;
  std::size_t    d_classes = 0;
  std::size_t    j_classes = 0;
  std::size_t    sigma_classes = 0;
  std::size_t    mu_classes    = 0;
  std::optional<std::size_t> xi_classes;
  std::optional<std::size_t> atoms;
  std::optional<std::string> decomposition;  // Boolean and fundamental
};

AnalysisReport analyze(SemigroupPtr const& s);

//! One "key: value" per line in a fixed order; absent values print as n/a.
std::string to_text(AnalysisReport const& r);
//! The same keys and order as a JSON object; absent values are null.
std::string to_json(AnalysisReport const& r);

}  // namespace invsg

#endif  // INVSG_REPORT_HPP_
