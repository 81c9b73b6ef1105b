// The natural partial order and the relations built from it.

#ifndef INVSG_ORDER_HPP_
#define INVSG_ORDER_HPP_

#include <optional>
#include <vector>

#include "invsg/semigroup.hpp"

namespace invsg {

//! s <= t iff s = t d(s).
bool natural_leq(FiniteInverseSemigroup const& s, Element a, Element b);

// The other three characterizations of the natural partial order. They are
// kept separate so the equivalence can be tested.
bool leq_by_right_idempotent(FiniteInverseSemigroup const& s, Element a, Element b);  // a = b e
bool leq_by_left_idempotent(FiniteInverseSemigroup const& s, Element a, Element b);   // a = f b
bool leq_by_range(FiniteInverseSemigroup const& s, Element a, Element b);             // a = r(a) b

//! a-down: all b <= a, sorted.
std::vector<Element> down_set(FiniteInverseSemigroup const& s, Element a);
std::vector<Element> up_set(FiniteInverseSemigroup const& s, Element a);
//! Elements strictly below a.
std::vector<Element> strictly_below(FiniteInverseSemigroup const& s, Element a);

//! a^-1 b and a b^-1 are both idempotent.
bool compatible(FiniteInverseSemigroup const& s, Element a, Element b);
//! a^-1 b = 0 = a b^-1. Throws NoZero.
bool orthogonal(FiniteInverseSemigroup const& s, Element a, Element b);

//! Greatest lower bound, found by scanning the order.
std::optional<Element> meet(FiniteInverseSemigroup const& s, Element a, Element b);
//! Least upper bound, found by scanning the order.
std::optional<Element> join(FiniteInverseSemigroup const& s, Element a, Element b);
//! Least upper bound of a set; the empty set joins to the zero if there is one.
std::optional<Element> join(FiniteInverseSemigroup const& s, std::vector<Element> const& xs);

//! The largest idempotent below a, if any.
std::optional<Element> fixed_point(FiniteInverseSemigroup const& s, Element a);

//! Length of the longest strictly descending chain starting at a.
std::vector<std::size_t> heights(FiniteInverseSemigroup const& s);

}  // namespace invsg

#endif  // INVSG_ORDER_HPP_
