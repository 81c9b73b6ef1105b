// Meet semilattices, the Munn semigroup T_E of order isomorphisms between
// principal ideals of E, and the Munn representation S -> T_E(S).

#ifndef INVSG_MUNN_HPP_
#define INVSG_MUNN_HPP_

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "invsg/homomorphism.hpp"
#include "invsg/pbij.hpp"
#include "invsg/semigroup.hpp"

namespace invsg {

class MeetSemilattice {
 public:
  [[nodiscard]] std::size_t size() const noexcept { return labels_.size(); }
  [[nodiscard]] Element meet(Element a, Element b) const { return meet_[a][b]; }
  //! a <= b iff a = ab.
  [[nodiscard]] bool leq(Element a, Element b) const { return meet_[a][b] == a; }
  [[nodiscard]] std::string const& label(Element a) const { return labels_[a]; }
  [[nodiscard]] std::vector<std::string> const& labels() const noexcept { return labels_; }
  [[nodiscard]] FiniteInverseSemigroup::Table const& table() const noexcept { return meet_; }
  //! e-down, sorted.
  [[nodiscard]] std::vector<Element> down(Element e) const;

  friend MeetSemilattice semilattice_from_band(std::vector<std::string>             labels,
                                               FiniteInverseSemigroup::Table const& table);

 private:
  std::vector<std::string>      labels_;
  FiniteInverseSemigroup::Table meet_;
};

//! Throws InvalidTable, NotABand, NotCommutative.
MeetSemilattice semilattice_from_band(std::vector<std::string>             labels,
                                      FiniteInverseSemigroup::Table const& table);
//! E(S), in the order of s.idempotents().
MeetSemilattice idempotent_semilattice(FiniteInverseSemigroup const& s);

struct OrderIso {
  Element                                from;  // e
  Element                                to;    // f
  std::vector<std::pair<Element, Element>> map;   // e-down -> f-down, by source
};

inline constexpr std::size_t default_munn_bound = 64;

struct MunnSemigroup {
  MeetSemilattice   semilattice;
  std::vector<OrderIso> isos;  // by element
  //! isos[i] as a partial bijection on points 1..|E|.
  std::vector<PartialBijection> maps;
  SemigroupPtr      semigroup;
};

//! All order isomorphisms between principal ideals, ordered by (from, to,
//! map), under composition. Throws BoundExceeded when |E| > bound.
MunnSemigroup munn_semigroup(MeetSemilattice const& e, std::size_t bound = default_munn_bound);

struct MunnRepresentation {
  MunnSemigroup munn;
  //! Index in s of each element of E(S), i.e. s.idempotents().
  std::vector<Element> idempotents;
  Homomorphism         delta;
};

//! delta_s(e) = s e s^-1 on d(s)-down. Checked to be idempotent-separating
//! with kernel mu.
MunnRepresentation munn_representation(SemigroupPtr const& s,
                                       std::size_t         bound = default_munn_bound);

//! delta is injective; checked against the centralizer test.
bool is_fundamental_munn(SemigroupPtr const& s);

}  // namespace invsg

#endif  // INVSG_MUNN_HPP_
