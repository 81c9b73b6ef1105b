// Structural predicates of finite inverse semigroups.
//
// Flags that only make sense in the presence of a zero are std::optional and
// left empty ("not applicable") on zero-free input.

#ifndef INVSG_PREDICATES_HPP_
#define INVSG_PREDICATES_HPP_

#include <optional>
#include <vector>

#include "invsg/partition.hpp"
#include "invsg/semigroup.hpp"

namespace invsg {

struct PropertyReport {
  bool                is_group            = false;
  bool                is_meet_semilattice = false;
  bool                is_clifford         = false;
  std::optional<bool> has_infinitesimal;
  bool                is_e_unitary = false;
  std::optional<bool> is_e_star_unitary;
  bool                is_factorizable = false;
  bool                is_f_inverse    = false;
  bool                is_fundamental  = false;
  std::optional<bool> is_0_simple;
  std::optional<bool> is_0_disjunctive;
  bool                is_bisimple = false;
  std::optional<bool> is_0_bisimple;
};

//! Every flag by definition, each cross-checked against the equivalent
//! characterizations below. A disagreement throws InvariantViolation.
PropertyReport predicates(FiniteInverseSemigroup const& s);

bool is_group(FiniteInverseSemigroup const& s);
bool is_meet_semilattice(FiniteInverseSemigroup const& s);

//! Idempotents are central.
bool is_clifford(FiniteInverseSemigroup const& s);
//! d(s) = r(s) for all s.
bool has_equal_domains_and_ranges(FiniteInverseSemigroup const& s);
//! Every element lies in some subgroup.
bool is_union_of_groups(FiniteInverseSemigroup const& s);

//! Some a != 0 with a^2 = 0. Throws NoZero.
bool has_infinitesimal(FiniteInverseSemigroup const& s);

bool is_e_unitary(FiniteInverseSemigroup const& s);
//! Throws NoZero.
bool is_e_star_unitary(FiniteInverseSemigroup const& s);

std::vector<std::vector<bool>> compatibility_matrix(FiniteInverseSemigroup const& s);
bool                           compatibility_is_transitive(FiniteInverseSemigroup const& s);

//! a sigma b iff some u <= a, b.
Partition minimum_group_partition(FiniteInverseSemigroup const& s);

//! Monoid in which every element lies below a unit.
bool is_factorizable(FiniteInverseSemigroup const& s);
//! Monoid in which every sigma-class has a greatest element.
bool is_f_inverse(FiniteInverseSemigroup const& s);

//! The centralizer of the idempotents is exactly the idempotents.
bool is_fundamental(FiniteInverseSemigroup const& s);

//! Only ideals are {0} and S. Throws NoZero.
bool is_0_simple(FiniteInverseSemigroup const& s);
//! E(S) is 0-disjunctive. Throws NoZero.
bool is_0_disjunctive(FiniteInverseSemigroup const& s);

bool is_bisimple(FiniteInverseSemigroup const& s);
//! Throws NoZero.
bool is_0_bisimple(FiniteInverseSemigroup const& s);

}  // namespace invsg

#endif  // INVSG_PREDICATES_HPP_
