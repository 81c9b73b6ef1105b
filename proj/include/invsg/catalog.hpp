// Small named inverse semigroups used throughout the tests and the CLI.

#ifndef INVSG_CATALOG_HPP_
#define INVSG_CATALOG_HPP_

#include <cstddef>

#include "invsg/semigroup.hpp"

namespace invsg::catalog {

FiniteInverseSemigroup trivial_group();
//! Z_n with labels "0" .. "n-1" under addition mod n.
FiniteInverseSemigroup cyclic_group(std::size_t n);
//! The chain 0 < 1 < ... < k-1 under minimum.
FiniteInverseSemigroup chain_semilattice(std::size_t k);
//! Subsets of {1..k} under intersection, labels "{}", "{1}", "{1,2}", ...
FiniteInverseSemigroup boolean_semilattice(std::size_t k);
//! S with a new zero placed first and labelled "0" (primed until unique).
FiniteInverseSemigroup adjoin_zero(FiniteInverseSemigroup const& s);

}  // namespace invsg::catalog

#endif  // INVSG_CATALOG_HPP_
