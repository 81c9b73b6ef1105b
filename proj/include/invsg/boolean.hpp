// Distributive and Boolean inverse monoids: joins, complements, Frink's
// axioms, additive ideals and the decomposition of finite fundamental Boolean
// inverse monoids into symmetric inverse monoids.

#ifndef INVSG_BOOLEAN_HPP_
#define INVSG_BOOLEAN_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "invsg/homomorphism.hpp"
#include "invsg/semigroup.hpp"

namespace invsg {

//! Least upper bounds of all pairs (no_element where none exists), found by
//! scanning up-sets. Row-major, n*n.
std::vector<Element> join_table(FiniteInverseSemigroup const& s);

struct BooleanCertificate {
  SemigroupPtr         base;
  std::vector<Element> complement;  // no_element off the idempotents
  std::vector<Element> joins;       // join_table(*base)

  [[nodiscard]] Element comp(Element e) const { return complement[e]; }
  [[nodiscard]] std::optional<Element> join(Element a, Element b) const {
    auto j = joins[a * base->size() + b];
    return j == no_element ? std::nullopt : std::optional<Element>(j);
  }
};

//! Compatible pairs have joins and multiplication distributes over them.
//! Throws NotAMonoid, NoZero.
bool is_distributive(FiniteInverseSemigroup const& s);
//! Distributive with complemented idempotents. Throws NotAMonoid, NoZero.
std::optional<BooleanCertificate> is_boolean(SemigroupPtr const& s);
//! As is_boolean, throwing NotBoolean instead of returning nothing.
BooleanCertificate boolean_certificate(SemigroupPtr const& s);

//! x \ y = x comp(d(y)). Throws NotBelow unless y <= x.
Element relative_complement(BooleanCertificate const& cert, Element x, Element y);

//! Checks ab = a <=> a comp(b) = 0 on a commutative band with zero and
//! involution, and returns a + b = comp(comp(a) comp(b)), which must be the
//! least upper bound. Throws FrinkViolation.
FiniteInverseSemigroup::Table frink_verify(FiniteInverseSemigroup::Table const& band,
                                           std::vector<Element> const&          complement,
                                           Element                              zero);

//! Join of pairwise orthogonal elements; the empty list joins to zero.
//! Throws NotOrthogonal, NoJoin.
Element orthogonal_join(FiniteInverseSemigroup const& s, std::vector<Element> const& xs);

//! Ideals containing 0 and closed under compatible joins, each sorted, in
//! lexicographic order. Throws NotBoolean.
std::vector<std::vector<Element>> additive_ideals(SemigroupPtr const& s);
bool is_0_simplifying(SemigroupPtr const& s);

//! Pairs (a,b) in lexicographic order, labelled "(a,b)".
FiniteInverseSemigroup direct_product(FiniteInverseSemigroup const& s,
                                      FiniteInverseSemigroup const& t);
//! Tuples in lexicographic order (last factor fastest), labelled "(a,b,...)".
//! The empty product is the one-element monoid "()".
FiniteInverseSemigroup direct_product(std::vector<SemigroupPtr> const& factors);

struct Decomposition {
  std::vector<std::size_t> factors;  // descending
  SemigroupPtr             product;  // I_{n_1} x ... x I_{n_r}
  Homomorphism             iso;      // S -> product
};
//! Throws NotBoolean, NotFundamental.
Decomposition decompose_fundamental(SemigroupPtr const& s);
//! "I3 x I1"; the empty product prints as "I0".
std::string to_string(Decomposition const& d);

//! A(S) is principal; checked against the centralizer and Munn tests.
//! Throws NotBoolean.
bool is_fundamental_boolean(SemigroupPtr const& s);

}  // namespace invsg

#endif  // INVSG_BOOLEAN_HPP_
