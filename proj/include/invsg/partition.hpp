// Set partitions of {0, ..., n-1} in canonical form, plus a union-find used
// to build them.

#ifndef INVSG_PARTITION_HPP_
#define INVSG_PARTITION_HPP_

#include <cstddef>
#include <vector>

namespace invsg {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n);

  std::size_t find(std::size_t x);
  //! True when x and y were in different blocks.
  bool unite(std::size_t x, std::size_t y);

  [[nodiscard]] std::size_t size() const noexcept { return parent_.size(); }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> rank_;
};

// Classes are numbered by their least member, so two partitions are equal
// exactly when their class_of vectors are.
class Partition {
 public:
  Partition() = default;
  //! \p block_ids may use any numbering; it is normalized.
  explicit Partition(std::vector<std::size_t> const& block_ids);
  explicit Partition(UnionFind& uf);

  static Partition discrete(std::size_t n);
  static Partition universal(std::size_t n);
  static Partition from_classes(std::size_t                           n,
                                std::vector<std::vector<std::size_t>> const& classes);

  [[nodiscard]] std::size_t size() const noexcept { return class_of_.size(); }
  [[nodiscard]] std::size_t class_count() const noexcept { return count_; }
  [[nodiscard]] std::size_t class_of(std::size_t x) const { return class_of_[x]; }
  [[nodiscard]] bool same(std::size_t x, std::size_t y) const {
    return class_of_[x] == class_of_[y];
  }
  [[nodiscard]] std::vector<std::size_t> const& class_ids() const noexcept {
    return class_of_;
  }
  //! Sorted classes, ordered by least member.
  [[nodiscard]] std::vector<std::vector<std::size_t>> classes() const;
  [[nodiscard]] std::vector<std::size_t> class_members(std::size_t x) const;

  [[nodiscard]] bool is_discrete() const noexcept { return count_ == size(); }
  [[nodiscard]] bool is_universal() const noexcept { return count_ <= 1; }

  //! Every class of *this lies inside a class of \p coarser.
  [[nodiscard]] bool refines(Partition const& coarser) const;

  bool operator==(Partition const&) const = default;
  auto operator<=>(Partition const&) const = default;

 private:
  std::vector<std::size_t> class_of_;
  std::size_t              count_ = 0;
};

Partition join(Partition const& a, Partition const& b);
Partition meet(Partition const& a, Partition const& b);

}  // namespace invsg

#endif  // INVSG_PARTITION_HPP_
