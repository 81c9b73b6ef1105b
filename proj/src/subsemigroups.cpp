#include "invsg/subsemigroups.hpp"

#include <algorithm>

#include "invsg/errors.hpp"

namespace invsg {

namespace {

void require_idempotent(FiniteInverseSemigroup const& s, Element e) {
  require(e < s.size() && s.is_idempotent(e), ErrorCode::NotIdempotent,
          "'" + (e < s.size() ? s.label(e) : std::to_string(e)) + "' is not an idempotent");
}

}  // namespace

std::vector<Element> centralizer_of_idempotents(FiniteInverseSemigroup const& s) {
  std::vector<Element> out;
  for (Element a = 0; a < s.size(); ++a) {
    if (std::all_of(s.idempotents().begin(), s.idempotents().end(),
                    [&](Element e) { return s.mul(a, e) == s.mul(e, a); })) {
      out.push_back(a);
    }
  }
  return out;
}

FiniteInverseSemigroup local_monoid(FiniteInverseSemigroup const& s, Element e) {
  require_idempotent(s, e);
  std::vector<Element> members;
  for (Element a = 0; a < s.size(); ++a) {
    members.push_back(s.mul(e, a, e));
  }
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  auto sub = induced_subsemigroup(s, members);
  ensure(sub.one() == sub.find(s.label(e)), "local monoid eSe has identity other than e");
  return sub;
}

FiniteInverseSemigroup group_of_units(FiniteInverseSemigroup const& s) {
  return local_group(s, s.one_or_throw());
}

FiniteInverseSemigroup local_group(FiniteInverseSemigroup const& s, Element e) {
  require_idempotent(s, e);
  std::vector<Element> members;
  for (Element a = 0; a < s.size(); ++a) {
    if (s.d(a) == e && s.r(a) == e) {
      members.push_back(a);
    }
  }
  return induced_subsemigroup(s, members);
}

std::vector<Element> essential_idempotents(FiniteInverseSemigroup const& s) {
  auto const           z = s.zero_or_throw();
  std::vector<Element> out;
  for (auto e : s.idempotents()) {
    if (e == z) {
      continue;
    }
    if (std::all_of(s.idempotents().begin(), s.idempotents().end(),
                    [&](Element f) { return f == z || s.mul(e, f) != z; })) {
      out.push_back(e);
    }
  }
  return out;
}

std::optional<std::vector<Element>> essential_part(FiniteInverseSemigroup const& s) {
  auto const        essential = essential_idempotents(s);
  std::vector<bool> is_essential(s.size(), false);
  for (auto e : essential) {
    is_essential[e] = true;
  }
  std::vector<Element> out;
  for (Element a = 0; a < s.size(); ++a) {
    if (is_essential[s.d(a)] && is_essential[s.r(a)]) {
      out.push_back(a);
    }
  }
  if (out.empty()) {
    return std::nullopt;
  }
  ensure(is_inverse_subsemigroup(s, out), "essential part is not an inverse subsemigroup");
  return out;
}

std::vector<Element> subclosure(FiniteInverseSemigroup const& s, std::vector<Element> subset) {
  std::vector<bool> in(s.size(), false);
  for (auto a : subset) {
    in[a] = true;
  }
  for (auto a : std::vector<Element>(subset)) {
    if (!in[s.inverse(a)]) {
      in[s.inverse(a)] = true;
      subset.push_back(s.inverse(a));
    }
  }
  auto const gens = subset;
  for (std::size_t i = 0; i < subset.size(); ++i) {
    for (auto g : gens) {
      auto x = s.mul(subset[i], g);
      if (!in[x]) {
        in[x] = true;
        subset.push_back(x);
      }
    }
  }
  std::sort(subset.begin(), subset.end());
  return subset;
}

bool is_wide(FiniteInverseSemigroup const& s, std::vector<Element> const& subset) {
  return std::all_of(s.idempotents().begin(), s.idempotents().end(), [&](Element e) {
    return std::find(subset.begin(), subset.end(), e) != subset.end();
  });
}

bool is_inverse_subsemigroup(FiniteInverseSemigroup const& s,
                             std::vector<Element> const&   subset) {
  std::vector<bool> in(s.size(), false);
  for (auto a : subset) {
    in[a] = true;
  }
  for (auto a : subset) {
    if (!in[s.inverse(a)]) {
      return false;
    }
    for (auto b : subset) {
      if (!in[s.mul(a, b)]) {
        return false;
      }
    }
  }
  return !subset.empty();
}

}  // namespace invsg
