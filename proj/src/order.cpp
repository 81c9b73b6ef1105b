#include "invsg/order.hpp"

#include <algorithm>

#include "invsg/errors.hpp"

namespace invsg {

bool natural_leq(FiniteInverseSemigroup const& s, Element a, Element b) {
  return a == s.mul(b, s.d(a));
}

bool leq_by_right_idempotent(FiniteInverseSemigroup const& s, Element a, Element b) {
  return std::any_of(s.idempotents().begin(), s.idempotents().end(),
                     [&](Element e) { return s.mul(b, e) == a; });
}

bool leq_by_left_idempotent(FiniteInverseSemigroup const& s, Element a, Element b) {
  return std::any_of(s.idempotents().begin(), s.idempotents().end(),
                     [&](Element f) { return s.mul(f, b) == a; });
}

bool leq_by_range(FiniteInverseSemigroup const& s, Element a, Element b) {
  return a == s.mul(s.r(a), b);
}

std::vector<Element> down_set(FiniteInverseSemigroup const& s, Element a) {
  std::vector<Element> out;
  for (Element b = 0; b < s.size(); ++b) {
    if (s.leq(b, a)) {
      out.push_back(b);
    }
  }
  return out;
}

std::vector<Element> up_set(FiniteInverseSemigroup const& s, Element a) {
  std::vector<Element> out;
  for (Element b = 0; b < s.size(); ++b) {
    if (s.leq(a, b)) {
      out.push_back(b);
    }
  }
  return out;
}

std::vector<Element> strictly_below(FiniteInverseSemigroup const& s, Element a) {
  auto out = down_set(s, a);
  out.erase(std::find(out.begin(), out.end(), a));
  return out;
}

bool compatible(FiniteInverseSemigroup const& s, Element a, Element b) {
  return s.is_idempotent(s.mul(s.inverse(a), b)) && s.is_idempotent(s.mul(a, s.inverse(b)));
}

bool orthogonal(FiniteInverseSemigroup const& s, Element a, Element b) {
  auto const z = s.zero_or_throw();
  return s.mul(s.inverse(a), b) == z && s.mul(a, s.inverse(b)) == z;
}

namespace {

template <typename Pred>
std::optional<Element> greatest(FiniteInverseSemigroup const& s, Pred in_set) {
  std::vector<Element> candidates;
  for (Element u = 0; u < s.size(); ++u) {
    if (in_set(u)) {
      candidates.push_back(u);
    }
  }
  for (auto u : candidates) {
    if (std::all_of(candidates.begin(), candidates.end(),
                    [&](Element v) { return s.leq(v, u); })) {
      return u;
    }
  }
  return std::nullopt;
}

template <typename Pred>
std::optional<Element> least(FiniteInverseSemigroup const& s, Pred in_set) {
  std::vector<Element> candidates;
  for (Element u = 0; u < s.size(); ++u) {
    if (in_set(u)) {
      candidates.push_back(u);
    }
  }
  for (auto u : candidates) {
    if (std::all_of(candidates.begin(), candidates.end(),
                    [&](Element v) { return s.leq(u, v); })) {
      return u;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<Element> meet(FiniteInverseSemigroup const& s, Element a, Element b) {
  return greatest(s, [&](Element u) { return s.leq(u, a) && s.leq(u, b); });
}

std::optional<Element> join(FiniteInverseSemigroup const& s, Element a, Element b) {
  return least(s, [&](Element u) { return s.leq(a, u) && s.leq(b, u); });
}

std::optional<Element> join(FiniteInverseSemigroup const& s, std::vector<Element> const& xs) {
  if (xs.empty()) {
    return s.zero();
  }
  return least(s, [&](Element u) {
    return std::all_of(xs.begin(), xs.end(), [&](Element x) { return s.leq(x, u); });
  });
}

std::optional<Element> fixed_point(FiniteInverseSemigroup const& s, Element a) {
  return greatest(s, [&](Element u) { return s.is_idempotent(u) && s.leq(u, a); });
}

std::vector<std::size_t> heights(FiniteInverseSemigroup const& s) {
  // Below-sets are strictly smaller, so processing by size of down-set gives
  // a valid topological order.
  std::vector<std::vector<Element>> below(s.size());
  std::vector<Element>              order(s.size());
  for (Element a = 0; a < s.size(); ++a) {
    below[a] = strictly_below(s, a);
    order[a] = a;
  }
  std::sort(order.begin(), order.end(),
            [&](Element a, Element b) { return below[a].size() < below[b].size(); });
  std::vector<std::size_t> h(s.size(), 0);
  for (auto a : order) {
    for (auto b : below[a]) {
      h[a] = std::max(h[a], h[b] + 1);
    }
  }
  return h;
}

}  // namespace invsg
