#include "invsg/predicates.hpp"

#include <algorithm>

#include "invsg/errors.hpp"
#include "invsg/greens.hpp"
#include "invsg/order.hpp"
#include "invsg/subsemigroups.hpp"

namespace invsg {

bool is_group(FiniteInverseSemigroup const& s) {
  return s.idempotents().size() == 1;
}

bool is_meet_semilattice(FiniteInverseSemigroup const& s) {
  return s.idempotents().size() == s.size();
}

bool is_clifford(FiniteInverseSemigroup const& s) {
  for (auto e : s.idempotents()) {
    for (Element a = 0; a < s.size(); ++a) {
      if (s.mul(e, a) != s.mul(a, e)) {
        return false;
      }
    }
  }
  return true;
}

bool has_equal_domains_and_ranges(FiniteInverseSemigroup const& s) {
  for (Element a = 0; a < s.size(); ++a) {
    if (s.d(a) != s.r(a)) {
      return false;
    }
  }
  return true;
}

bool is_union_of_groups(FiniteInverseSemigroup const& s) {
  for (Element a = 0; a < s.size(); ++a) {
    bool in_subgroup = false;
    for (auto e : s.idempotents()) {
      if (s.mul(e, a) != a || s.mul(a, e) != a) {
        continue;
      }
      for (Element t = 0; t < s.size() && !in_subgroup; ++t) {
        in_subgroup = s.mul(a, t) == e && s.mul(t, a) == e && s.mul(e, t) == t
                      && s.mul(t, e) == t;
      }
      if (in_subgroup) {
        break;
      }
    }
    if (!in_subgroup) {
      return false;
    }
  }
  return true;
}

bool has_infinitesimal(FiniteInverseSemigroup const& s) {
  auto const z = s.zero_or_throw();
  for (Element a = 0; a < s.size(); ++a) {
    if (a != z && s.mul(a, a) == z) {
      return true;
    }
  }
  return false;
}

bool is_e_unitary(FiniteInverseSemigroup const& s) {
  for (Element a = 0; a < s.size(); ++a) {
    if (s.is_idempotent(a)) {
      continue;
    }
    for (auto e : s.idempotents()) {
      if (s.leq(e, a)) {
        return false;
      }
    }
  }
  return true;
}

bool is_e_star_unitary(FiniteInverseSemigroup const& s) {
  auto const z = s.zero_or_throw();
  for (Element a = 0; a < s.size(); ++a) {
    if (s.is_idempotent(a)) {
      continue;
    }
    for (auto e : s.idempotents()) {
      if (e != z && s.leq(e, a)) {
        return false;
      }
    }
  }
  return true;
}

std::vector<std::vector<bool>> compatibility_matrix(FiniteInverseSemigroup const& s) {
  std::vector<std::vector<bool>> out(s.size(), std::vector<bool>(s.size()));
  for (Element a = 0; a < s.size(); ++a) {
    for (Element b = 0; b < s.size(); ++b) {
      out[a][b] = compatible(s, a, b);
    }
  }
  return out;
}

bool compatibility_is_transitive(FiniteInverseSemigroup const& s) {
  auto const c = compatibility_matrix(s);
  for (Element a = 0; a < s.size(); ++a) {
    for (Element b = 0; b < s.size(); ++b) {
      if (!c[a][b]) {
        continue;
      }
      for (Element x = 0; x < s.size(); ++x) {
        if (c[b][x] && !c[a][x]) {
          return false;
        }
      }
    }
  }
  return true;
}

Partition minimum_group_partition(FiniteInverseSemigroup const& s) {
  std::size_t const              n = s.size();
  std::vector<std::vector<bool>> below(n, std::vector<bool>(n));
  for (Element a = 0; a < n; ++a) {
    for (Element u = 0; u < n; ++u) {
      below[a][u] = s.leq(u, a);
    }
  }
  UnionFind uf(n);
  for (Element a = 0; a < n; ++a) {
    for (Element b = a + 1; b < n; ++b) {
      for (Element u = 0; u < n; ++u) {
        if (below[a][u] && below[b][u]) {
          uf.unite(a, b);
          break;
        }
      }
    }
  }
  Partition p(uf);
  // The relation is already an equivalence; union-find must not have added
  // pairs without a common lower bound.
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (p.same(a, b)) {
        bool common = false;
        for (Element u = 0; u < n && !common; ++u) {
          common = below[a][u] && below[b][u];
        }
        ensure(common, "common-lower-bound relation is not transitive");
      }
    }
  }
  return p;
}

bool is_factorizable(FiniteInverseSemigroup const& s) {
  if (!s.is_monoid()) {
    return false;
  }
  auto const           one = *s.one();
  std::vector<Element> units;
  for (Element g = 0; g < s.size(); ++g) {
    if (s.d(g) == one && s.r(g) == one) {
      units.push_back(g);
    }
  }
  for (Element a = 0; a < s.size(); ++a) {
    if (std::none_of(units.begin(), units.end(), [&](Element g) { return s.leq(a, g); })) {
      return false;
    }
  }
  return true;
}

bool is_f_inverse(FiniteInverseSemigroup const& s) {
  if (!s.is_monoid()) {
    return false;
  }
  for (auto const& cls : minimum_group_partition(s).classes()) {
    bool has_max = std::any_of(cls.begin(), cls.end(), [&](Element top) {
      return std::all_of(cls.begin(), cls.end(), [&](Element x) { return s.leq(x, top); });
    });
    if (!has_max) {
      return false;
    }
  }
  return true;
}

bool is_fundamental(FiniteInverseSemigroup const& s) {
  return centralizer_of_idempotents(s) == s.idempotents();
}

bool is_0_simple(FiniteInverseSemigroup const& s) {
  auto const z      = s.zero_or_throw();
  auto const ideals = principal_ideals(s);
  for (Element a = 0; a < s.size(); ++a) {
    if (a != z && std::find(ideals[a].begin(), ideals[a].end(), false) != ideals[a].end()) {
      return false;
    }
  }
  return true;
}

bool is_0_disjunctive(FiniteInverseSemigroup const& s) {
  auto const  z = s.zero_or_throw();
  auto const& e = s.idempotents();
  for (auto f : e) {
    for (auto top : e) {
      if (f == z || f == top || !s.leq(f, top)) {
        continue;
      }
      bool witness = std::any_of(e.begin(), e.end(), [&](Element g) {
        return g != z && s.leq(g, top) && s.mul(f, g) == z;
      });
      if (!witness) {
        return false;
      }
    }
  }
  return true;
}

bool is_bisimple(FiniteInverseSemigroup const& s) {
  return d_relation(s).class_count() == 1;
}

bool is_0_bisimple(FiniteInverseSemigroup const& s) {
  s.zero_or_throw();
  return d_relation(s).class_count() == 2;
}

PropertyReport predicates(FiniteInverseSemigroup const& s) {
  PropertyReport p;
  p.is_group            = is_group(s);
  p.is_meet_semilattice = is_meet_semilattice(s);
  p.is_clifford         = is_clifford(s);
  ensure(p.is_clifford == has_equal_domains_and_ranges(s),
         "Clifford: central idempotents disagrees with d = r");
  ensure(p.is_clifford == is_union_of_groups(s),
         "Clifford: central idempotents disagrees with union of groups");
  p.is_e_unitary = is_e_unitary(s);
  ensure(p.is_e_unitary == compatibility_is_transitive(s),
         "E-unitary disagrees with transitivity of compatibility");
  p.is_factorizable = is_factorizable(s);
  p.is_f_inverse    = is_f_inverse(s);
  ensure(!p.is_f_inverse || p.is_e_unitary, "F-inverse monoid that is not E-unitary");
  p.is_fundamental = is_fundamental(s);
  p.is_bisimple    = is_bisimple(s);
  if (s.has_zero()) {
    p.has_infinitesimal = has_infinitesimal(s);
    p.is_e_star_unitary = is_e_star_unitary(s);
    p.is_0_simple       = is_0_simple(s);
    p.is_0_disjunctive  = is_0_disjunctive(s);
    p.is_0_bisimple     = is_0_bisimple(s);
    if (*p.is_0_disjunctive) {
      ensure(p.is_clifford == !*p.has_infinitesimal,
             "Clifford disagrees with absence of infinitesimals");
    }
  }
  return p;
}

}  // namespace invsg
