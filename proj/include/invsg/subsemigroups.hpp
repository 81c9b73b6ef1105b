// Distinguished subsets and subsemigroups: centralizer of the idempotents,
// local monoids and groups, the group of units, the essential part.

#ifndef INVSG_SUBSEMIGROUPS_HPP_
#define INVSG_SUBSEMIGROUPS_HPP_

#include <optional>
#include <vector>

#include "invsg/semigroup.hpp"

namespace invsg {

//! Elements commuting with every idempotent.
std::vector<Element> centralizer_of_idempotents(FiniteInverseSemigroup const& s);

//! eSe, an inverse monoid with identity e. Throws NotIdempotent.
FiniteInverseSemigroup local_monoid(FiniteInverseSemigroup const& s, Element e);

//! The H-class of the identity. Throws NotAMonoid.
FiniteInverseSemigroup group_of_units(FiniteInverseSemigroup const& s);

//! The maximal subgroup H_e. Throws NotIdempotent.
FiniteInverseSemigroup local_group(FiniteInverseSemigroup const& s, Element e);

//! Non-zero idempotents meeting every non-zero idempotent. Throws NoZero.
std::vector<Element> essential_idempotents(FiniteInverseSemigroup const& s);

//! Elements whose domain and range idempotents are essential, or nothing
//! when there are none. Throws NoZero.
std::optional<std::vector<Element>> essential_part(FiniteInverseSemigroup const& s);

//! Closure of \p subset under product and inverse.
std::vector<Element> subclosure(FiniteInverseSemigroup const& s, std::vector<Element> subset);

//! Contains every idempotent.
bool is_wide(FiniteInverseSemigroup const& s, std::vector<Element> const& subset);

//! Closed under product and inverse.
bool is_inverse_subsemigroup(FiniteInverseSemigroup const& s,
                             std::vector<Element> const&   subset);

}  // namespace invsg

#endif  // INVSG_SUBSEMIGROUPS_HPP_
