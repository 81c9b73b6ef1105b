// Finite groupoids, the underlying groupoid of an inverse semigroup, atoms,
// the monoid of local bisections K(G), and the maps relating S, K(G(S)) and
// K(A(S)).

#ifndef INVSG_GROUPOID_HPP_
#define INVSG_GROUPOID_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "invsg/homomorphism.hpp"
#include "invsg/partition.hpp"
#include "invsg/pbij.hpp"
#include "invsg/semigroup.hpp"

namespace invsg {

using Arrow = std::size_t;

inline constexpr Arrow no_arrow = no_element;

// Arrows x : dom(x) -> cod(x). Identities are arrows, and dom/cod hold arrow
// indices. x.y is defined iff dom(x) = cod(y).
class FiniteGroupoid {
 public:
  using CompTable = std::vector<std::vector<Arrow>>;  // no_arrow when undefined

  FiniteGroupoid() = default;
  //! Throws InvalidGroupoid unless the data satisfy the groupoid axioms.
  FiniteGroupoid(std::vector<std::string> names, std::vector<Arrow> dom, std::vector<Arrow> cod,
                 CompTable comp, std::vector<Arrow> inv);

  [[nodiscard]] std::size_t size() const noexcept { return names_.size(); }
  [[nodiscard]] std::string const& name(Arrow x) const { return names_[x]; }
  [[nodiscard]] std::vector<std::string> const& names() const noexcept { return names_; }
  [[nodiscard]] Arrow dom(Arrow x) const { return dom_[x]; }
  [[nodiscard]] Arrow cod(Arrow x) const { return cod_[x]; }
  [[nodiscard]] Arrow inverse(Arrow x) const { return inv_[x]; }
  [[nodiscard]] std::optional<Arrow> compose(Arrow x, Arrow y) const {
    auto z = comp_[x][y];
    return z == no_arrow ? std::nullopt : std::optional<Arrow>(z);
  }
  [[nodiscard]] CompTable const& comp() const noexcept { return comp_; }
  [[nodiscard]] bool is_identity(Arrow x) const { return dom_[x] == x; }
  //! Identity arrows in index order.
  [[nodiscard]] std::vector<Arrow> const& identities() const noexcept { return identities_; }
  //! Arrows with dom e and cod f.
  [[nodiscard]] std::vector<Arrow> hom(Arrow e, Arrow f) const;
  //! The local group at identity e.
  [[nodiscard]] std::vector<Arrow> local_group(Arrow e) const { return hom(e, e); }

 private:
  std::vector<std::string> names_;
  std::vector<Arrow>       dom_;
  std::vector<Arrow>       cod_;
  CompTable                comp_;
  std::vector<Arrow>       inv_;
  std::vector<Arrow>       identities_;
};

//! Elements of s under the restricted product s.t = st when d(s) = r(t).
FiniteGroupoid underlying_groupoid(FiniteInverseSemigroup const& s);
//! G with a zero adjoined (index 0, labelled "0" or primed until unique);
//! undefined composites go to zero.
FiniteInverseSemigroup adjoin_zero(FiniteGroupoid const& g);

//! Arrows (x,y) for x, y in 1..n, with d(x,y) = (y,y) and r(x,y) = (x,x).
FiniteGroupoid pair_groupoid(std::size_t n);
//! Arrows (x,y) with x and y in the same class.
FiniteGroupoid from_equivalence(std::vector<std::vector<Point>> const& classes);
//! The one-object groupoid of a group. Throws InvalidGroupoid if \p group
//! is not a group.
FiniteGroupoid one_object_groupoid(FiniteInverseSemigroup const& group);
FiniteGroupoid discrete_groupoid(std::size_t k);

//! Arrows are related iff their identities are joined by some arrow.
Partition components(FiniteGroupoid const& g);
//! At most one arrow between any two identities; checked against triviality
//! of all local groups.
bool is_principal(FiniteGroupoid const& g);
bool is_union_of_groups(FiniteGroupoid const& g);

std::optional<std::vector<Arrow>> find_groupoid_isomorphism(FiniteGroupoid const& a,
                                                            FiniteGroupoid const& b);
inline bool are_isomorphic(FiniteGroupoid const& a, FiniteGroupoid const& b) {
  return find_groupoid_isomorphism(a, b).has_value();
}

//! Nonzero elements with only 0 strictly below. Throws NoZero.
std::vector<Element> atoms(FiniteInverseSemigroup const& s);
//! The atoms under the restricted product, arrows in element order.
//! Throws NoZero.
FiniteGroupoid atomic_groupoid(FiniteInverseSemigroup const& s);

inline constexpr std::size_t default_bisection_bound = 5000;

struct BisectionMonoid {
  FiniteGroupoid                  groupoid;
  SemigroupPtr                    semigroup;
  std::vector<std::vector<Arrow>> subsets;  // sorted arrow lists, by element

  //! \p arrows must be sorted.
  [[nodiscard]] std::optional<Element> index_of(std::vector<Arrow> const& arrows) const;

  std::map<std::vector<Arrow>, Element> index;
};

//! Local bisections in canonical order (by size, then arrow list), found by
//! choosing at most one arrow out of each identity with distinct targets.
std::vector<std::vector<Arrow>> enumerate_local_bisections(FiniteGroupoid const& g,
                                                           std::size_t bound = default_bisection_bound);
//! The same list by filtering all subsets. Only for at most 16 arrows.
std::vector<std::vector<Arrow>> local_bisections_by_subsets(FiniteGroupoid const& g);

//! K(G) under subset product, identity the set of identities and zero the
//! empty set. Throws BoundExceeded.
BisectionMonoid local_bisections(FiniteGroupoid g, std::size_t bound = default_bisection_bound);

struct AtomIso {
  BisectionMonoid bisections;  // K(A(S))
  Homomorphism    theta;       // a -> atoms below a
};
//! S is isomorphic to K(A(S)) for finite Boolean S. Throws NotBoolean.
AtomIso atom_iso(SemigroupPtr const& s);

struct DownsetEmbedding {
  BisectionMonoid bisections;  // K(G(S))
  Homomorphism    beta;        // a -> a-down
};
//! Throws NotAMonoid, BoundExceeded.
DownsetEmbedding downset_embedding(SemigroupPtr const& s,
                                   std::size_t bound = default_bisection_bound);

//! The morphism gamma : K(G(S)) -> T with gamma o beta = alpha, for a monoid
//! homomorphism alpha : S -> T into a Boolean inverse monoid T.
//! Throws NotBoolean, NotAHomomorphism.
Homomorphism extend_to_bisections(Homomorphism const& alpha, DownsetEmbedding const& beta);
Homomorphism extend_to_bisections(Homomorphism const& alpha);

//! Number of join-preserving multiplicative maps K(G(S)) -> T that send
//! every a-down to alpha(a), counted by backtracking over the images of
//! singletons. Stops at \p limit.
std::size_t count_extensions(Homomorphism const& alpha, DownsetEmbedding const& beta,
                             std::size_t limit = 2);

//! One node per identity, one edge dom -> cod per other arrow.
std::string to_dot(FiniteGroupoid const& g);

}  // namespace invsg

#endif  // INVSG_GROUPOID_HPP_
