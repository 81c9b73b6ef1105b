// Homomorphisms between finite inverse semigroups, their standard checks,
// and backtracking searches for homomorphisms and isomorphisms.

#ifndef INVSG_HOMOMORPHISM_HPP_
#define INVSG_HOMOMORPHISM_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "invsg/semigroup.hpp"

namespace invsg {

struct Homomorphism {
  SemigroupPtr         source;
  SemigroupPtr         target;
  std::vector<Element> map;

  Element operator()(Element a) const { return map[a]; }
};

//! theta(st) = theta(s) theta(t) on all pairs.
bool is_multiplicative(Homomorphism const& theta);

//! Builds and checks. Throws NotAHomomorphism.
Homomorphism make_homomorphism(SemigroupPtr source, SemigroupPtr target,
                               std::vector<Element> map);

struct HomReport {
  bool                 is_homomorphism = false;
  bool                 is_injective    = false;
  bool                 is_surjective   = false;
  bool                 is_idempotent_separating = false;
  bool                 is_idempotent_pure       = false;
  std::vector<Element> image;  // sorted target elements
  SemigroupPtr         image_semigroup;
};

//! Throws NotAHomomorphism when multiplicativity fails.
HomReport hom_checks(Homomorphism const& theta);

struct HomSearchOptions {
  bool        monoid = false;  // require 1 -> 1
  std::size_t limit  = 0;      // stop after this many (0 = no limit)
};

//! All homomorphisms source -> target, in lexicographic order of the images
//! of a greedy generating set.
std::vector<Homomorphism> enumerate_homomorphisms(SemigroupPtr const& source,
                                                  SemigroupPtr const& target,
                                                  HomSearchOptions    options = {});

//! A small generating set, chosen greedily in element order.
std::vector<Element> generating_set(FiniteInverseSemigroup const& s);

//! An isomorphism source -> target if one exists. Candidates are filtered by
//! order-theoretic and Green's invariants before the backtracking search.
std::optional<std::vector<Element>> find_isomorphism(FiniteInverseSemigroup const& source,
                                                     FiniteInverseSemigroup const& target);

inline bool are_isomorphic(FiniteInverseSemigroup const& a, FiniteInverseSemigroup const& b) {
  return find_isomorphism(a, b).has_value();
}

}  // namespace invsg

#endif  // INVSG_HOMOMORPHISM_HPP_
