// Inverse subsemigroups of I_n generated by partial bijections.

#ifndef INVSG_CLOSURE_HPP_
#define INVSG_CLOSURE_HPP_

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include "invsg/pbij.hpp"
#include "invsg/semigroup.hpp"

namespace invsg {

//! A semigroup together with a faithful labelling of its elements by
//! partial bijections.
struct ConcreteSemigroup {
  SemigroupPtr                  semigroup;
  std::vector<PartialBijection> elements;

  [[nodiscard]] std::optional<Element> index_of(PartialBijection const& f) const;
};

inline constexpr std::size_t default_closure_bound = 100'000;

//! Smallest set containing \p generators closed under composition and
//! inversion. Elements appear in breadth-first order: first the sorted
//! generators together with their inverses, then right products by those.
//!
//! Throws DegreeMismatch, BoundExceeded, InvalidTable (no generators).
ConcreteSemigroup closure_from_generators(std::vector<PartialBijection> generators,
                                          std::size_t bound = default_closure_bound);

//! The full symmetric inverse monoid, elements in sorted order.
ConcreteSemigroup symmetric_inverse_monoid(std::size_t n,
                                           std::size_t bound = default_enumeration_bound);

//! Builds the Cayley table of a set of partial bijections that is already
//! closed under composition and inversion, keeping the given order.
ConcreteSemigroup concrete_semigroup(std::vector<PartialBijection> elements);

}  // namespace invsg

#endif  // INVSG_CLOSURE_HPP_
