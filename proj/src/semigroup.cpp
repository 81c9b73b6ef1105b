#include "invsg/semigroup.hpp"

#include <algorithm>
#include <unordered_set>

#include "invsg/errors.hpp"

namespace invsg {

namespace {

std::string triple(std::vector<std::string> const& labels, Element a, Element b, Element c) {
  return "(" + labels[a] + ", " + labels[b] + ", " + labels[c] + ")";
}

}  // namespace

FiniteInverseSemigroup FiniteInverseSemigroup::validate_cayley(
    std::vector<std::string> labels,
    Table const&             mult,
    std::optional<Element>   zero,
    std::optional<Element>   one,
    std::span<Element const> generators) {
  FiniteInverseSemigroup s;
  std::size_t const      n = labels.size();
  require(n > 0, ErrorCode::InvalidTable, "a semigroup needs at least one element");
  require(mult.size() == n, ErrorCode::InvalidTable, "table has "
              + std::to_string(mult.size()) + " rows for " + std::to_string(n) + " labels");
  s.mult_.reserve(n * n);
  for (auto const& row : mult) {
    require(row.size() == n, ErrorCode::InvalidTable, "table is not square");
    for (auto x : row) {
      require(x < n, ErrorCode::InvalidTable, "table entry out of range");
      s.mult_.push_back(x);
    }
  }
  for (Element a = 0; a < n; ++a) {
    auto [it, inserted] = s.index_.emplace(labels[a], a);
    require(inserted, ErrorCode::InvalidTable, "duplicate label '" + labels[a] + "'");
  }
  s.labels_ = std::move(labels);

  if (generators.empty()) {
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        auto ab = s.mul(a, b);
        for (Element c = 0; c < n; ++c) {
          if (s.mul(ab, c) != s.mul(a, s.mul(b, c))) {
            fail(ErrorCode::NotAssociative, triple(s.labels_, a, b, c));
          }
        }
      }
    }
  } else {
    // Light's test: (xg)y = x(gy) for generators g suffices once the
    // generators are known to generate.
    std::vector<bool>    seen(n, false);
    std::vector<Element> queue;
    for (auto g : generators) {
      require(g < n, ErrorCode::InvalidTable, "generator out of range");
      if (!seen[g]) {
        seen[g] = true;
        queue.push_back(g);
      }
    }
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (auto g : generators) {
        auto x = s.mul(queue[i], g);
        if (!seen[x]) {
          seen[x] = true;
          queue.push_back(x);
        }
      }
    }
    require(queue.size() == n, ErrorCode::InvalidTable,
            "declared generators do not generate the table");
    for (auto g : generators) {
      for (Element x = 0; x < n; ++x) {
        auto xg = s.mul(x, g);
        for (Element y = 0; y < n; ++y) {
          if (s.mul(xg, y) != s.mul(x, s.mul(g, y))) {
            fail(ErrorCode::NotAssociative, triple(s.labels_, x, g, y));
          }
        }
      }
    }
  }

  s.idempotent_.assign(n, false);
  for (Element a = 0; a < n; ++a) {
    if (s.mul(a, a) == a) {
      s.idempotent_[a] = true;
      s.idempotent_list_.push_back(a);
    }
  }

  // Regularity: in a regular semigroup whose idempotents commute every
  // element has exactly one inverse.
  s.inv_.assign(n, no_element);
  std::vector<Element> other_inverse(n, no_element);
  for (Element a = 0; a < n; ++a) {
    for (Element t = 0; t < n; ++t) {
      if (s.mul(a, t, a) == a && s.mul(t, a, t) == t) {
        if (s.inv_[a] == no_element) {
          s.inv_[a] = t;
        } else if (other_inverse[a] == no_element) {
          other_inverse[a] = t;
        }
      }
    }
    if (s.inv_[a] == no_element) {
      fail(ErrorCode::NotRegular, "'" + s.labels_[a] + "' has no inverse");
    }
  }
  for (auto e : s.idempotent_list_) {
    for (auto f : s.idempotent_list_) {
      if (s.mul(e, f) != s.mul(f, e)) {
        fail(ErrorCode::IdempotentsDoNotCommute,
             "(" + s.labels_[e] + ", " + s.labels_[f] + ")");
      }
    }
  }
  for (Element a = 0; a < n; ++a) {
    ensure(other_inverse[a] == no_element,
           "element with two inverses in a semigroup with commuting idempotents");
  }

  auto is_zero = [&](Element z) {
    for (Element a = 0; a < n; ++a) {
      if (s.mul(z, a) != z || s.mul(a, z) != z) {
        return false;
      }
    }
    return true;
  };
  auto is_one = [&](Element u) {
    for (Element a = 0; a < n; ++a) {
      if (s.mul(u, a) != a || s.mul(a, u) != a) {
        return false;
      }
    }
    return true;
  };
  if (zero) {
    require(*zero < n && is_zero(*zero), ErrorCode::BadZero,
            "declared zero is not absorbing");
    s.zero_ = zero;
  } else {
    // Zeros are idempotent, so the scan can stay on idempotents.
    for (auto e : s.idempotent_list_) {
      if (is_zero(e)) {
        s.zero_ = e;
        break;
      }
    }
  }
  if (one) {
    require(*one < n && is_one(*one), ErrorCode::BadOne, "declared one is not neutral");
    s.one_ = one;
  } else {
    for (auto e : s.idempotent_list_) {
      if (is_one(e)) {
        s.one_ = e;
        break;
      }
    }
  }
  return s;
}

Element FiniteInverseSemigroup::zero_or_throw() const {
  if (!zero_) {
    fail(ErrorCode::NoZero, "the semigroup has no zero");
  }
  return *zero_;
}

Element FiniteInverseSemigroup::one_or_throw() const {
  if (!one_) {
    fail(ErrorCode::NotAMonoid, "the semigroup has no identity");
  }
  return *one_;
}

std::optional<Element> FiniteInverseSemigroup::find(std::string const& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) {
    return std::nullopt;
  }
  return it->second;
}

Element FiniteInverseSemigroup::at(std::string const& label) const {
  auto e = find(label);
  if (!e) {
    fail(ErrorCode::ParseError, "unknown element label '" + label + "'");
  }
  return *e;
}

FiniteInverseSemigroup::Table FiniteInverseSemigroup::table() const {
  Table out(size(), std::vector<Element>(size()));
  for (Element a = 0; a < size(); ++a) {
    for (Element b = 0; b < size(); ++b) {
      out[a][b] = mul(a, b);
    }
  }
  return out;
}

FiniteInverseSemigroup induced_subsemigroup(FiniteInverseSemigroup const& s,
                                            std::vector<Element>          subset) {
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  std::vector<Element> position(s.size(), no_element);
  for (std::size_t i = 0; i < subset.size(); ++i) {
    position[subset[i]] = i;
  }
  std::vector<std::string>      labels;
  FiniteInverseSemigroup::Table mult(subset.size(), std::vector<Element>(subset.size()));
  for (std::size_t i = 0; i < subset.size(); ++i) {
    labels.push_back(s.label(subset[i]));
    for (std::size_t j = 0; j < subset.size(); ++j) {
      auto p = position[s.mul(subset[i], subset[j])];
      require(p != no_element, ErrorCode::InvalidTable, "subset is not closed under product");
      mult[i][j] = p;
    }
  }
  return FiniteInverseSemigroup::validate_cayley(std::move(labels), mult);
}

std::vector<Element> greedy_generators(FiniteInverseSemigroup::Table const& mult) {
  std::size_t const    n = mult.size();
  std::vector<Element> gens;
  std::vector<bool>    covered(n, false);
  std::vector<Element> members;
  for (Element a = n; a-- > 0;) {
    if (covered[a]) {
      continue;
    }
    gens.push_back(a);
    covered[a] = true;
    members.push_back(a);
    // Extend the closure: old members times the new generator, then right
    // products of everything new by all generators.
    std::size_t const old = members.size() - 1;
    for (std::size_t i = 0; i < old; ++i) {
      auto x = mult[members[i]][a];
      if (!covered[x]) {
        covered[x] = true;
        members.push_back(x);
      }
    }
    for (std::size_t i = old; i < members.size(); ++i) {
      for (auto g : gens) {
        auto x = mult[members[i]][g];
        if (!covered[x]) {
          covered[x] = true;
          members.push_back(x);
        }
      }
    }
  }
  return gens;
}

}  // namespace invsg
