#include "invsg/partition.hpp"

#include <map>
#include <numeric>
#include <utility>

#include "invsg/errors.hpp"

namespace invsg {

UnionFind::UnionFind(std::size_t n) : parent_(n), rank_(n, 0) {
  std::iota(parent_.begin(), parent_.end(), 0);
}

std::size_t UnionFind::find(std::size_t x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x          = parent_[x];
  }
  return x;
}

bool UnionFind::unite(std::size_t x, std::size_t y) {
  x = find(x);
  y = find(y);
  if (x == y) {
    return false;
  }
  if (rank_[x] < rank_[y]) {
    std::swap(x, y);
  }
  parent_[y] = x;
  if (rank_[x] == rank_[y]) {
    ++rank_[x];
  }
  return true;
}

Partition::Partition(std::vector<std::size_t> const& block_ids)
    : class_of_(block_ids.size()) {
  std::map<std::size_t, std::size_t> renumber;
  for (std::size_t i = 0; i < block_ids.size(); ++i) {
    auto [it, inserted] = renumber.emplace(block_ids[i], renumber.size());
    class_of_[i]        = it->second;
  }
  count_ = renumber.size();
}

Partition::Partition(UnionFind& uf) : class_of_(uf.size()) {
  std::vector<std::size_t> roots(uf.size());
  for (std::size_t i = 0; i < uf.size(); ++i) {
    roots[i] = uf.find(i);
  }
  *this = Partition(roots);
}

Partition Partition::discrete(std::size_t n) {
  std::vector<std::size_t> ids(n);
  std::iota(ids.begin(), ids.end(), 0);
  return Partition(ids);
}

Partition Partition::universal(std::size_t n) {
  return Partition(std::vector<std::size_t>(n, 0));
}

Partition Partition::from_classes(std::size_t                                  n,
                                  std::vector<std::vector<std::size_t>> const& classes) {
  constexpr auto           unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> ids(n, unset);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    for (auto x : classes[c]) {
      require(x < n && ids[x] == unset, ErrorCode::InvalidTable,
              "classes do not partition 0.." + std::to_string(n - 1));
      ids[x] = c;
    }
  }
  for (auto id : ids) {
    require(id != unset, ErrorCode::InvalidTable, "classes miss an element");
  }
  return Partition(ids);
}

std::vector<std::vector<std::size_t>> Partition::classes() const {
  std::vector<std::vector<std::size_t>> out(count_);
  for (std::size_t i = 0; i < class_of_.size(); ++i) {
    out[class_of_[i]].push_back(i);
  }
  return out;
}

std::vector<std::size_t> Partition::class_members(std::size_t x) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < class_of_.size(); ++i) {
    if (class_of_[i] == class_of_[x]) {
      out.push_back(i);
    }
  }
  return out;
}

bool Partition::refines(Partition const& coarser) const {
  if (coarser.size() != size()) {
    return false;
  }
  std::vector<std::size_t> image(count_, static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < size(); ++i) {
    auto& slot = image[class_of_[i]];
    if (slot == static_cast<std::size_t>(-1)) {
      slot = coarser.class_of_[i];
    } else if (slot != coarser.class_of_[i]) {
      return false;
    }
  }
  return true;
}

Partition join(Partition const& a, Partition const& b) {
  UnionFind uf(a.size());
  std::vector<std::size_t> first_a(a.class_count(), static_cast<std::size_t>(-1));
  std::vector<std::size_t> first_b(b.class_count(), static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto& fa = first_a[a.class_of(i)];
    auto& fb = first_b[b.class_of(i)];
    if (fa == static_cast<std::size_t>(-1)) {
      fa = i;
    } else {
      uf.unite(fa, i);
    }
    if (fb == static_cast<std::size_t>(-1)) {
      fb = i;
    } else {
      uf.unite(fb, i);
    }
  }
  return Partition(uf);
}

Partition meet(Partition const& a, Partition const& b) {
  std::vector<std::size_t> ids(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    ids[i] = a.class_of(i) * (b.class_count() + 1) + b.class_of(i);
  }
  return Partition(ids);
}

}  // namespace invsg
