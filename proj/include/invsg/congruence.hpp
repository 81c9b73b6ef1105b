// Congruences on finite inverse semigroups: closure from generating pairs,
// the full lattice by brute force, quotients, and the canonical congruences
// sigma (minimum group), mu (maximum idempotent-separating) and xi (maximum
// 0-restricted).

#ifndef INVSG_CONGRUENCE_HPP_
#define INVSG_CONGRUENCE_HPP_

#include <cstddef>
#include <utility>
#include <vector>

#include "invsg/homomorphism.hpp"
#include "invsg/partition.hpp"
#include "invsg/semigroup.hpp"

namespace invsg {

class Congruence {
 public:
  //! Throws NotACongruence if \p classes is not compatible with
  //! multiplication on both sides.
  Congruence(SemigroupPtr base, Partition classes);

  static Congruence equality(SemigroupPtr base);
  static Congruence universal(SemigroupPtr base);

  [[nodiscard]] SemigroupPtr const& base() const noexcept { return base_; }
  [[nodiscard]] Partition const&    partition() const noexcept { return classes_; }
  [[nodiscard]] std::size_t class_count() const noexcept { return classes_.class_count(); }
  [[nodiscard]] bool related(Element a, Element b) const { return classes_.same(a, b); }
  [[nodiscard]] std::vector<std::vector<Element>> classes() const { return classes_.classes(); }

  [[nodiscard]] bool is_equality() const noexcept { return classes_.is_discrete(); }
  [[nodiscard]] bool is_universal() const noexcept { return classes_.is_universal(); }
  [[nodiscard]] bool is_contained_in(Congruence const& other) const {
    return classes_.refines(other.classes_);
  }

  bool operator==(Congruence const& other) const { return classes_ == other.classes_; }

 private:
  SemigroupPtr base_;
  Partition    classes_;
};

using ElementPair = std::pair<Element, Element>;

//! The least congruence containing \p pairs.
Congruence congruence_closure(SemigroupPtr const& s, std::vector<ElementPair> const& pairs);

Congruence join(Congruence const& a, Congruence const& b);

inline constexpr std::size_t default_oracle_bound = 12;

//! Every congruence on s, as the join-closure of the principal congruences.
//! Sorted by partition. Throws BoundExceeded when |S| > bound.
std::vector<Congruence> all_congruences(SemigroupPtr const& s,
                                        std::size_t bound = default_oracle_bound);

struct Quotient {
  SemigroupPtr semigroup;
  Homomorphism natural_map;
};

//! S / rho. Classes keep the order of their least members; a class is
//! labelled by its least member, in brackets when it has more than one.
Quotient quotient(Congruence const& rho);

//! The congruence collapsing \p ideal. Throws NotAnIdeal.
Congruence rees_congruence(SemigroupPtr const& s, std::vector<Element> const& ideal);
//! S / I with the collapsed ideal labelled "0". Throws NotAnIdeal.
Quotient rees_quotient(SemigroupPtr const& s, std::vector<Element> const& ideal);

Congruence kernel(Homomorphism const& theta);

//! s sigma t iff some u <= s, t.
Congruence sigma(SemigroupPtr const& s);
//! s mu t iff ses^-1 = tet^-1 for every idempotent e.
Congruence mu(SemigroupPtr const& s);
//! s xi t iff (asb = 0 <=> atb = 0) for all a, b. Throws NoZero.
Congruence xi(SemigroupPtr const& s);

bool is_idempotent_separating(Congruence const& rho);
bool is_idempotent_pure(Congruence const& rho);
//! The class of zero is {0}. Throws NoZero.
bool is_zero_restricted(Congruence const& rho);
//! The quotient is a group.
bool has_group_quotient(Congruence const& rho);

//! Given theta : S -> G with G a group, the unique theta* : S/sigma -> G with
//! theta = theta* o sigma-natural. Throws TargetNotAGroup, NotAHomomorphism.
struct SigmaFactorization {
  Quotient     sigma_quotient;
  Homomorphism factor;
};
SigmaFactorization factor_through_sigma(Homomorphism const& theta);

//! Fundamental, 0-simple and E(S) 0-disjunctive. For |S| up to the oracle
//! bound the answer is checked against the congruence lattice. A one-element
//! semigroup is reported as not congruence-free. Throws NoZero.
bool is_congruence_free(SemigroupPtr const& s);

}  // namespace invsg

#endif  // INVSG_CONGRUENCE_HPP_
