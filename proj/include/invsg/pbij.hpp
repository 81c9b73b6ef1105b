// Partial bijections on the ground set {1, ..., n}.
//
// These are the elements of the symmetric inverse monoid I_n. Products use
// the apply-right-first convention: compose(f, g) is "g, then f", so that
// x -> f(g(x)). With this convention the left translations a -> (x -> ax)
// of an inverse semigroup compose like the elements themselves.

#ifndef INVSG_PBIJ_HPP_
#define INVSG_PBIJ_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace invsg {

using Point = std::uint32_t;

class PartialBijection {
 public:
  using Pair = std::pair<Point, Point>;

  //! The empty map of degree \p degree.
  explicit PartialBijection(std::size_t degree);

  //! Builds the map from its graph. Throws PointOutOfRange if a point lies
  //! outside {1..degree}, NotAPartialBijection if the graph is not functional
  //! or not injective.
  PartialBijection(std::size_t degree, std::vector<Pair> const& graph);

  static PartialBijection identity(std::size_t degree);

  //! Parses "1>2,3>1", "id:1,2" or "0" (the empty map).
  static PartialBijection parse(std::string_view text, std::size_t degree);

  [[nodiscard]] std::size_t degree() const noexcept { return image_.size(); }
  [[nodiscard]] std::optional<Point> operator()(Point x) const;

  [[nodiscard]] std::vector<Pair>  graph() const;
  [[nodiscard]] std::vector<Point> domain() const;
  [[nodiscard]] std::vector<Point> range() const;
  [[nodiscard]] std::vector<Point> fixed_points() const;
  [[nodiscard]] std::size_t        rank() const noexcept;

  [[nodiscard]] bool is_empty() const noexcept { return rank() == 0; }
  [[nodiscard]] bool is_partial_identity() const noexcept;

  //! Canonical text: "0" for the empty map, "id:..." for a nonempty partial
  //! identity, otherwise "x>y,..." sorted by source point.
  [[nodiscard]] std::string to_string() const;

  bool operator==(PartialBijection const&) const = default;
  std::strong_ordering operator<=>(PartialBijection const& other) const;

  [[nodiscard]] std::size_t hash() const noexcept;

 private:
  // image_[x - 1] is f(x), or 0 when x is not in the domain.
  std::vector<Point> image_;
};

PartialBijection partial_identity(std::size_t degree,
                                  std::vector<Point> const& points);

//! x -> f(g(x)). Throws DegreeMismatch.
PartialBijection compose(PartialBijection const& f, PartialBijection const& g);

PartialBijection invert(PartialBijection const& f);

//! Graph inclusion. Throws DegreeMismatch.
bool restriction_leq(PartialBijection const& f, PartialBijection const& g);

//! f union g when that is again a partial bijection.
std::optional<PartialBijection> compatible_union(PartialBijection const& f,
                                                 PartialBijection const& g);

inline constexpr std::size_t default_enumeration_bound = 5;

//! Every partial bijection of degree n, sorted. Throws BoundExceeded when
//! n > bound.
std::vector<PartialBijection> enumerate_symmetric_inverse_monoid(
    std::size_t n,
    std::size_t bound = default_enumeration_bound);

}  // namespace invsg

template <>
struct std::hash<invsg::PartialBijection> {
  std::size_t operator()(invsg::PartialBijection const& f) const noexcept {
    return f.hash();
  }
};

#endif  // INVSG_PBIJ_HPP_
