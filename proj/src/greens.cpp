#include "invsg/greens.hpp"

#include <algorithm>

#include "invsg/errors.hpp"

namespace invsg {

std::vector<std::vector<bool>> principal_ideals(FiniteInverseSemigroup const& s) {
  std::size_t const              n = s.size();
  std::vector<std::vector<bool>> out(n, std::vector<bool>(n, false));
  std::vector<Element>           left;
  for (Element a = 0; a < n; ++a) {
    // S^1 a, then (S^1 a) S^1.
    std::vector<bool> in_left(n, false);
    in_left[a] = true;
    for (Element x = 0; x < n; ++x) {
      in_left[s.mul(x, a)] = true;
    }
    for (Element y = 0; y < n; ++y) {
      if (!in_left[y]) {
        continue;
      }
      out[a][y] = true;
      for (Element z = 0; z < n; ++z) {
        out[a][s.mul(y, z)] = true;
      }
    }
  }
  return out;
}

std::vector<Element> principal_ideal(FiniteInverseSemigroup const& s, Element a) {
  return ideal_generated_by(s, {a});
}

Partition d_relation(FiniteInverseSemigroup const& s) {
  UnionFind uf(s.size());
  for (Element a = 0; a < s.size(); ++a) {
    uf.unite(s.d(a), s.r(a));
  }
  std::vector<std::size_t> ids(s.size());
  for (Element a = 0; a < s.size(); ++a) {
    ids[a] = uf.find(s.d(a));
  }
  return Partition(ids);
}

std::vector<std::vector<bool>> j_order_by_criterion(FiniteInverseSemigroup const& s) {
  std::size_t const              n = s.size();
  auto const                     dr = d_relation(s);
  std::vector<std::vector<bool>> out(n, std::vector<bool>(n, false));
  for (Element b = 0; b < n; ++b) {
    for (Element b_low = 0; b_low < n; ++b_low) {
      if (!s.leq(b_low, b)) {
        continue;
      }
      for (Element a = 0; a < n; ++a) {
        if (dr.same(a, b_low)) {
          out[a][b] = true;
        }
      }
    }
  }
  return out;
}

GreensRelations greens(FiniteInverseSemigroup const& s) {
  std::size_t const        n = s.size();
  std::vector<std::size_t> d_ids(n), r_ids(n), h_ids(n);
  for (Element a = 0; a < n; ++a) {
    d_ids[a] = s.d(a);
    r_ids[a] = s.r(a);
    h_ids[a] = s.d(a) * n + s.r(a);
  }
  GreensRelations g{Partition(d_ids), Partition(r_ids), Partition(h_ids), d_relation(s), {}};

  auto const ideals = principal_ideals(s);
  auto const jleq   = j_order_by_criterion(s);
  std::vector<std::size_t> j_ids(n);
  for (Element a = 0; a < n; ++a) {
    j_ids[a] = a;
    for (Element b = 0; b < n; ++b) {
      // a in SbS iff SaS subset of SbS
      ensure(ideals[b][a] == jleq[a][b],
             "J-order from ideals disagrees with the D-below criterion");
    }
    for (Element b = 0; b < a; ++b) {
      if (ideals[a] == ideals[b]) {
        j_ids[a] = j_ids[b];
        break;
      }
    }
  }
  g.J = Partition(j_ids);
  return g;
}

std::vector<Element> ideal_generated_by(FiniteInverseSemigroup const& s,
                                        std::vector<Element> const&   seeds) {
  std::vector<bool> in(s.size(), false);
  for (auto a : seeds) {
    in[a] = true;
    for (Element x = 0; x < s.size(); ++x) {
      for (Element y = 0; y < s.size(); ++y) {
        in[s.mul(x, a, y)] = true;
      }
      in[s.mul(x, a)] = true;
      in[s.mul(a, x)] = true;
    }
  }
  std::vector<Element> out;
  for (Element a = 0; a < s.size(); ++a) {
    if (in[a]) {
      out.push_back(a);
    }
  }
  return out;
}

bool is_ideal(FiniteInverseSemigroup const& s, std::vector<Element> const& subset) {
  if (subset.empty()) {
    return false;
  }
  std::vector<bool> in(s.size(), false);
  for (auto a : subset) {
    in[a] = true;
  }
  for (auto a : subset) {
    for (Element x = 0; x < s.size(); ++x) {
      if (!in[s.mul(x, a)] || !in[s.mul(a, x)]) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace invsg
