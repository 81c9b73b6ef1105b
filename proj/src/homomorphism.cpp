#include "invsg/homomorphism.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "invsg/errors.hpp"
#include "invsg/partition.hpp"

namespace invsg {

bool is_multiplicative(Homomorphism const& theta) {
  auto const& s = *theta.source;
  auto const& t = *theta.target;
  if (theta.map.size() != s.size()) {
    return false;
  }
  for (auto x : theta.map) {
    if (x >= t.size()) {
      return false;
    }
  }
  for (Element a = 0; a < s.size(); ++a) {
    for (Element b = 0; b < s.size(); ++b) {
      if (theta.map[s.mul(a, b)] != t.mul(theta.map[a], theta.map[b])) {
        return false;
      }
    }
  }
  return true;
}

Homomorphism make_homomorphism(SemigroupPtr source, SemigroupPtr target,
                               std::vector<Element> map) {
  Homomorphism theta{std::move(source), std::move(target), std::move(map)};
  if (!is_multiplicative(theta)) {
    fail(ErrorCode::NotAHomomorphism, "map is not multiplicative");
  }
  return theta;
}

HomReport hom_checks(Homomorphism const& theta) {
  if (!is_multiplicative(theta)) {
    fail(ErrorCode::NotAHomomorphism, "map is not multiplicative");
  }
  auto const& s = *theta.source;
  auto const& t = *theta.target;
  HomReport   report;
  report.is_homomorphism = true;
  report.image           = theta.map;
  std::sort(report.image.begin(), report.image.end());
  report.image.erase(std::unique(report.image.begin(), report.image.end()),
                     report.image.end());
  report.is_injective  = report.image.size() == s.size();
  report.is_surjective = report.image.size() == t.size();

  report.is_idempotent_separating = true;
  for (auto e : s.idempotents()) {
    for (auto f : s.idempotents()) {
      if (e < f && theta(e) == theta(f)) {
        report.is_idempotent_separating = false;
      }
    }
  }
  report.is_idempotent_pure = true;
  for (Element a = 0; a < s.size(); ++a) {
    if (t.is_idempotent(theta(a)) && !s.is_idempotent(a)) {
      report.is_idempotent_pure = false;
    }
  }
  report.image_semigroup = share(induced_subsemigroup(t, report.image));
  return report;
}

std::vector<Element> generating_set(FiniteInverseSemigroup const& s) {
  std::vector<Element> gens;
  std::vector<bool>    covered(s.size(), false);
  std::vector<Element> members;
  for (Element a = 0; a < s.size(); ++a) {
    if (covered[a]) {
      continue;
    }
    gens.push_back(a);
    // Recompute the subsemigroup generated by gens.
    std::fill(covered.begin(), covered.end(), false);
    members.clear();
    for (auto g : gens) {
      if (!covered[g]) {
        covered[g] = true;
        members.push_back(g);
      }
    }
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (auto g : gens) {
        auto x = s.mul(members[i], g);
        if (!covered[x]) {
          covered[x] = true;
          members.push_back(x);
        }
      }
    }
  }
  return gens;
}

namespace {

// Partial map extended by closing the assigned generators under right
// multiplication. Holds enough state to undo an assignment.
class PartialMap {
 public:
  PartialMap(FiniteInverseSemigroup const& s, FiniteInverseSemigroup const& t, bool injective)
      : s_(s), t_(t), injective_(injective), map_(s.size(), no_element),
        used_(t.size(), false) {}

  // Returns false (with state restored) on conflict.
  bool assign(Element g, Element image, std::vector<Element> const& colors_s,
              std::vector<Element> const& colors_t) {
    std::size_t const mark = trail_.size();
    gens_.push_back(g);
    if (!set(g, image, colors_s, colors_t)) {
      undo(mark);
      gens_.pop_back();
      return false;
    }
    marks_.push_back(mark);
    for (std::size_t i = 0; i < domain_.size(); ++i) {
      auto x = domain_[i];
      for (auto h : gens_) {
        auto p = s_.mul(x, h);
        auto q = t_.mul(map_[x], map_[h]);
        if (!set(p, q, colors_s, colors_t)) {
          marks_.pop_back();
          undo(mark);
          gens_.pop_back();
          return false;
        }
      }
    }
    return true;
  }

  void unassign() {
    undo(marks_.back());
    marks_.pop_back();
    gens_.pop_back();
  }

  [[nodiscard]] std::vector<Element> const& map() const noexcept { return map_; }

 private:
  bool set(Element x, Element y, std::vector<Element> const& cs,
           std::vector<Element> const& ct) {
    if (map_[x] != no_element) {
      return map_[x] == y;
    }
    if (!cs.empty() && cs[x] != ct[y]) {
      return false;
    }
    if (injective_ && used_[y]) {
      return false;
    }
    map_[x] = y;
    used_[y] = true;
    trail_.push_back(x);
    domain_.push_back(x);
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      auto x = trail_.back();
      trail_.pop_back();
      if (injective_) {
        used_[map_[x]] = false;
      }
      map_[x] = no_element;
      domain_.pop_back();
    }
  }

  FiniteInverseSemigroup const& s_;
  FiniteInverseSemigroup const& t_;
  bool                          injective_;
  std::vector<Element>          map_;
  std::vector<bool>             used_;
  std::vector<Element>          trail_;
  std::vector<Element>          domain_;
  std::vector<Element>          gens_;
  std::vector<std::size_t>      marks_;
};

bool fully_multiplicative(FiniteInverseSemigroup const& s, FiniteInverseSemigroup const& t,
                          std::vector<Element> const& map) {
  for (Element a = 0; a < s.size(); ++a) {
    for (Element b = 0; b < s.size(); ++b) {
      if (map[s.mul(a, b)] != t.mul(map[a], map[b])) {
        return false;
      }
    }
  }
  return true;
}

using Invariant = std::vector<std::size_t>;

std::vector<Invariant> element_invariants(FiniteInverseSemigroup const& s) {
  std::size_t const n = s.size();
  UnionFind         uf(n);
  for (Element a = 0; a < n; ++a) {
    uf.unite(s.d(a), s.r(a));
  }
  std::vector<std::size_t> d_count(n, 0), r_count(n, 0), dclass_count(n, 0);
  for (Element a = 0; a < n; ++a) {
    ++d_count[s.d(a)];
    ++r_count[s.r(a)];
    ++dclass_count[uf.find(s.d(a))];
  }
  std::vector<Invariant> out(n);
  for (Element a = 0; a < n; ++a) {
    std::size_t below = 0, above = 0, left_fix = 0, right_fix = 0;
    for (Element b = 0; b < n; ++b) {
      below += s.leq(b, a) ? 1 : 0;
      above += s.leq(a, b) ? 1 : 0;
      left_fix += s.mul(b, a) == a ? 1 : 0;
      right_fix += s.mul(a, b) == a ? 1 : 0;
    }
    // Index and period of the monogenic subsemigroup.
    std::vector<std::size_t> first_seen(n, 0);
    Element                  power = a;
    std::size_t              k     = 1;
    while (first_seen[power] == 0) {
      first_seen[power] = k++;
      power             = s.mul(power, a);
    }
    std::size_t const index  = first_seen[power];
    std::size_t const period = k - first_seen[power];
    out[a] = {s.is_idempotent(a) ? 1u : 0u,
              s.zero() == a ? 1u : 0u,
              s.one() == a ? 1u : 0u,
              below,
              above,
              left_fix,
              right_fix,
              index,
              period,
              d_count[s.d(a)],
              r_count[s.r(a)],
              dclass_count[uf.find(s.d(a))],
              s.d(a) == s.r(a) ? 1u : 0u};
  }
  return out;
}

}  // namespace

std::vector<Homomorphism> enumerate_homomorphisms(SemigroupPtr const& source,
                                                  SemigroupPtr const& target,
                                                  HomSearchOptions    options) {
  auto const& s = *source;
  auto const& t = *target;
  if (options.monoid) {
    s.one_or_throw();
    t.one_or_throw();
  }
  auto const                gens = generating_set(s);
  PartialMap                pm(s, t, false);
  std::vector<Homomorphism> out;
  std::vector<Element> const no_colors;

  auto search = [&](auto&& self, std::size_t k) -> bool {
    if (k == gens.size()) {
      auto const& map = pm.map();
      if (options.monoid && map[*s.one()] != *t.one()) {
        return true;
      }
      if (fully_multiplicative(s, t, map)) {
        out.push_back(Homomorphism{source, target, map});
        if (options.limit != 0 && out.size() >= options.limit) {
          return false;
        }
      }
      return true;
    }
    auto const g = gens[k];
    for (Element image = 0; image < t.size(); ++image) {
      if (s.is_idempotent(g) && !t.is_idempotent(image)) {
        continue;
      }
      if (options.monoid && s.one() == g && t.one() != image) {
        continue;
      }
      if (pm.map()[g] != no_element && pm.map()[g] != image) {
        continue;
      }
      if (!pm.assign(g, image, no_colors, no_colors)) {
        continue;
      }
      bool const keep_going = self(self, k + 1);
      pm.unassign();
      if (!keep_going) {
        return false;
      }
    }
    return true;
  };
  search(search, 0);
  return out;
}

std::optional<std::vector<Element>> find_isomorphism(FiniteInverseSemigroup const& source,
                                                     FiniteInverseSemigroup const& target) {
  if (source.size() != target.size()
      || source.idempotents().size() != target.idempotents().size()) {
    return std::nullopt;
  }
  auto inv_s = element_invariants(source);
  auto inv_t = element_invariants(target);

  std::map<Invariant, Element> color_ids;
  std::map<Element, long>      balance;
  std::vector<Element>         colors_s(source.size()), colors_t(target.size());
  for (Element a = 0; a < source.size(); ++a) {
    colors_s[a] = color_ids.emplace(inv_s[a], color_ids.size()).first->second;
    ++balance[colors_s[a]];
  }
  for (Element a = 0; a < target.size(); ++a) {
    auto it = color_ids.find(inv_t[a]);
    if (it == color_ids.end()) {
      return std::nullopt;
    }
    colors_t[a] = it->second;
    --balance[colors_t[a]];
  }
  for (auto [color, count] : balance) {
    if (count != 0) {
      return std::nullopt;
    }
  }

  // Generators drawn from the rarest colour classes first.
  std::vector<std::size_t> class_size(color_ids.size(), 0);
  for (auto c : colors_s) {
    ++class_size[c];
  }
  std::vector<Element> order(source.size());
  for (Element a = 0; a < source.size(); ++a) {
    order[a] = a;
  }
  std::stable_sort(order.begin(), order.end(), [&](Element a, Element b) {
    return class_size[colors_s[a]] < class_size[colors_s[b]];
  });
  std::vector<Element> gens;
  {
    std::vector<bool>    covered(source.size(), false);
    std::vector<Element> members;
    for (auto a : order) {
      if (covered[a]) {
        continue;
      }
      gens.push_back(a);
      if (!covered[a]) {
        covered[a] = true;
        members.push_back(a);
      }
      for (std::size_t i = 0; i < members.size(); ++i) {
        for (auto g : gens) {
          for (auto x : {source.mul(members[i], g), source.mul(g, members[i])}) {
            if (!covered[x]) {
              covered[x] = true;
              members.push_back(x);
            }
          }
        }
      }
    }
  }

  PartialMap                          pm(source, target, true);
  std::optional<std::vector<Element>> found;
  auto search = [&](auto&& self, std::size_t k) -> bool {
    if (k == gens.size()) {
      auto const& map = pm.map();
      if (std::find(map.begin(), map.end(), no_element) == map.end()
          && fully_multiplicative(source, target, map)) {
        found = map;
        return true;
      }
      return false;
    }
    auto const g = gens[k];
    if (pm.map()[g] != no_element) {
      return self(self, k + 1);
    }
    for (Element image = 0; image < target.size(); ++image) {
      if (colors_t[image] != colors_s[g]) {
        continue;
      }
      if (!pm.assign(g, image, colors_s, colors_t)) {
        continue;
      }
      if (self(self, k + 1)) {
        return true;
      }
      pm.unassign();
    }
    return false;
  };
  search(search, 0);
  return found;
}

}  // namespace invsg
