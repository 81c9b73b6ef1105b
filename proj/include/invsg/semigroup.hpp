// Finite inverse semigroups given by validated Cayley tables.

#ifndef INVSG_SEMIGROUP_HPP_
#define INVSG_SEMIGROUP_HPP_

#include <cstddef>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace invsg {

//! Elements are indices into the canonical element order of their semigroup.
using Element = std::size_t;

inline constexpr Element no_element = std::numeric_limits<Element>::max();

class FiniteInverseSemigroup {
 public:
  using Table = std::vector<std::vector<Element>>;

  //! Validates \p mult against the inverse semigroup axioms and computes the
  //! inverse table. Associativity is checked on all triples, or by Light's
  //! test when \p generators is non-empty (in which case the generators must
  //! generate the whole table under right multiplication).
  //!
  //! Throws InvalidTable, NotAssociative, NotRegular,
  //! IdempotentsDoNotCommute, BadZero or BadOne.
  static FiniteInverseSemigroup validate_cayley(std::vector<std::string> labels,
                                                Table const&             mult,
                                                std::optional<Element>   zero = {},
                                                std::optional<Element>   one  = {},
                                                std::span<Element const> generators = {});

  [[nodiscard]] std::size_t size() const noexcept { return labels_.size(); }

  [[nodiscard]] Element mul(Element a, Element b) const noexcept {
    return mult_[a * size() + b];
  }
  [[nodiscard]] Element mul(Element a, Element b, Element c) const noexcept {
    return mul(mul(a, b), c);
  }
  [[nodiscard]] Element inverse(Element a) const noexcept { return inv_[a]; }

  //! d(a) = a^-1 a
  [[nodiscard]] Element d(Element a) const noexcept { return mul(inv_[a], a); }
  //! r(a) = a a^-1
  [[nodiscard]] Element r(Element a) const noexcept { return mul(a, inv_[a]); }

  [[nodiscard]] bool is_idempotent(Element a) const noexcept { return idempotent_[a]; }
  [[nodiscard]] std::vector<Element> const& idempotents() const noexcept {
    return idempotent_list_;
  }

  [[nodiscard]] std::optional<Element> zero() const noexcept { return zero_; }
  [[nodiscard]] std::optional<Element> one() const noexcept { return one_; }
  [[nodiscard]] bool has_zero() const noexcept { return zero_.has_value(); }
  [[nodiscard]] bool is_monoid() const noexcept { return one_.has_value(); }

  //! Throws NoZero / NotAMonoid when absent.
  Element zero_or_throw() const;
  Element one_or_throw() const;

  [[nodiscard]] std::string const& label(Element a) const { return labels_[a]; }
  [[nodiscard]] std::vector<std::string> const& labels() const noexcept { return labels_; }
  [[nodiscard]] std::optional<Element> find(std::string const& label) const;
  //! Throws ParseError for an unknown label.
  [[nodiscard]] Element at(std::string const& label) const;

  [[nodiscard]] Table table() const;

  //! s <= t in the natural partial order, i.e. s = t d(s).
  [[nodiscard]] bool leq(Element s, Element t) const noexcept { return s == mul(t, d(s)); }

 private:
  FiniteInverseSemigroup() = default;

  std::vector<std::string>                 labels_;
  std::vector<Element>                     mult_;
  std::vector<Element>                     inv_;
  std::vector<bool>                        idempotent_;
  std::vector<Element>                     idempotent_list_;
  std::optional<Element>                   zero_;
  std::optional<Element>                   one_;
  std::unordered_map<std::string, Element> index_;
};

using SemigroupPtr = std::shared_ptr<FiniteInverseSemigroup const>;

inline SemigroupPtr share(FiniteInverseSemigroup s) {
  return std::make_shared<FiniteInverseSemigroup const>(std::move(s));
}

//! The subset of \p s given by \p subset (which must be closed under product
//! and inverse), as a semigroup in its own right. Element order follows
//! \p subset after sorting.
FiniteInverseSemigroup induced_subsemigroup(FiniteInverseSemigroup const& s,
                                            std::vector<Element>          subset);

//! A generating set under right multiplication for a raw Cayley table,
//! taken greedily from the last element down, for use with Light's test.
std::vector<Element> greedy_generators(FiniteInverseSemigroup::Table const& mult);

}  // namespace invsg

#endif  // INVSG_SEMIGROUP_HPP_
