// Named semigroups and groupoids shared by the tests.

#ifndef INVSG_TESTS_CORPUS_HPP_
#define INVSG_TESTS_CORPUS_HPP_

#include <string>
#include <vector>

#include "invsg/groupoid.hpp"
#include "invsg/semigroup.hpp"

namespace corpus {

struct Entry {
  std::string         name;
  invsg::SemigroupPtr s;
};

invsg::SemigroupPtr trivial();
invsg::SemigroupPtr z2();
invsg::SemigroupPtr z3();
invsg::SemigroupPtr z2_zero();
invsg::SemigroupPtr chain2();
invsg::SemigroupPtr chain3();
invsg::SemigroupPtr square();  // the semilattice 2^2
invsg::SemigroupPtr b2();
invsg::SemigroupPtr sym(std::size_t n);  // I_n
invsg::SemigroupPtr k_z2();              // K(one-object Z_2)
invsg::SemigroupPtr k_pair2();           // K(pair groupoid on 2 points)
invsg::SemigroupPtr i1_x_i2();
invsg::SemigroupPtr k_equivalence();     // K(from_equivalence({{1,2},{3}}))
invsg::SemigroupPtr equivalence_zero();  // from_equivalence({{1,2},{3}}) with zero

invsg::FiniteGroupoid equivalence_groupoid();

//! Every member, in a fixed order.
std::vector<Entry> const& all();

}  // namespace corpus

#endif  // INVSG_TESTS_CORPUS_HPP_
