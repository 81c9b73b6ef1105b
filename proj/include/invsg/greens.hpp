// Green's relations of a finite inverse semigroup.

#ifndef INVSG_GREENS_HPP_
#define INVSG_GREENS_HPP_

#include <vector>

#include "invsg/partition.hpp"
#include "invsg/semigroup.hpp"

namespace invsg {

struct GreensRelations {
  Partition L;  // equal d
  Partition R;  // equal r
  Partition H;
  Partition D;  // connected components of the underlying groupoid
  Partition J;  // equal principal two-sided ideals
};

//! Computes all five relations. J is computed from principal ideals and
//! from the criterion "a J-below b iff a D b' for some b' <= b"; the two
//! must agree (InvariantViolation otherwise).
GreensRelations greens(FiniteInverseSemigroup const& s);

//! S^1 a S^1 as a sorted element list.
std::vector<Element> principal_ideal(FiniteInverseSemigroup const& s, Element a);

//! ideals[a][b] is true iff b lies in S^1 a S^1.
std::vector<std::vector<bool>> principal_ideals(FiniteInverseSemigroup const& s);

//! leq[a][b] iff a D b' for some b' <= b.
std::vector<std::vector<bool>> j_order_by_criterion(FiniteInverseSemigroup const& s);

Partition d_relation(FiniteInverseSemigroup const& s);

//! The smallest ideal containing \p seeds.
std::vector<Element> ideal_generated_by(FiniteInverseSemigroup const& s,
                                        std::vector<Element> const&   seeds);

bool is_ideal(FiniteInverseSemigroup const& s, std::vector<Element> const& subset);

}  // namespace invsg

#endif  // INVSG_GREENS_HPP_
