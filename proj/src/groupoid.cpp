#include "invsg/groupoid.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "invsg/boolean.hpp"
#include "invsg/errors.hpp"
#include "invsg/order.hpp"

namespace invsg {

namespace {

void check(bool cond, std::string const& detail) {
  require(cond, ErrorCode::InvalidGroupoid, detail);
}

bool canonical_less(std::vector<Arrow> const& a, std::vector<Arrow> const& b) {
  if (a.size() != b.size()) {
    return a.size() < b.size();
  }
  return a < b;
}

FiniteGroupoid groupoid_of_pairs(std::vector<std::pair<Point, Point>> pairs) {
  std::sort(pairs.begin(), pairs.end());
  std::size_t const                           n = pairs.size();
  std::map<std::pair<Point, Point>, Arrow>    index;
  for (Arrow i = 0; i < n; ++i) {
    index[pairs[i]] = i;
  }
  std::vector<std::string>  names;
  std::vector<Arrow>        dom(n), cod(n), inv(n);
  FiniteGroupoid::CompTable comp(n, std::vector<Arrow>(n, no_arrow));
  for (Arrow i = 0; i < n; ++i) {
    auto [x, y] = pairs[i];
    names.push_back("(" + std::to_string(x) + "," + std::to_string(y) + ")");
    dom[i] = index.at({y, y});
    cod[i] = index.at({x, x});
    inv[i] = index.at({y, x});
    for (Arrow j = 0; j < n; ++j) {
      if (pairs[j].first == y) {
        comp[i][j] = index.at({x, pairs[j].second});
      }
    }
  }
  return FiniteGroupoid(std::move(names), std::move(dom), std::move(cod), std::move(comp),
                        std::move(inv));
}

}  // namespace

FiniteGroupoid::FiniteGroupoid(std::vector<std::string> names, std::vector<Arrow> dom,
                               std::vector<Arrow> cod, CompTable comp, std::vector<Arrow> inv)
    : names_(std::move(names)),
      dom_(std::move(dom)),
      cod_(std::move(cod)),
      comp_(std::move(comp)),
      inv_(std::move(inv)) {
  std::size_t const n = names_.size();
  check(dom_.size() == n && cod_.size() == n && inv_.size() == n && comp_.size() == n,
        "arrow data of different lengths");
  check(std::set<std::string>(names_.begin(), names_.end()).size() == n, "duplicate arrow names");
  for (Arrow x = 0; x < n; ++x) {
    check(comp_[x].size() == n, "composition table is not square");
    check(dom_[x] < n && cod_[x] < n && inv_[x] < n, "arrow index out of range");
  }
  for (Arrow x = 0; x < n; ++x) {
    for (auto e : {dom_[x], cod_[x]}) {
      check(dom_[e] == e && cod_[e] == e, "'" + names_[x] + "' has a non-identity end");
    }
    if (dom_[x] == x) {
      check(cod_[x] == x, "identity '" + names_[x] + "' has a different codomain");
      identities_.push_back(x);
    }
  }
  for (Arrow x = 0; x < n; ++x) {
    for (Arrow y = 0; y < n; ++y) {
      auto const z = comp_[x][y];
      if (dom_[x] != cod_[y]) {
        check(z == no_arrow, "'" + names_[x] + "'.'" + names_[y] + "' should be undefined");
        continue;
      }
      check(z < n, "'" + names_[x] + "'.'" + names_[y] + "' should be defined");
      check(dom_[z] == dom_[y] && cod_[z] == cod_[x],
            "'" + names_[x] + "'.'" + names_[y] + "' has the wrong ends");
    }
    check(comp_[x][dom_[x]] == x && comp_[cod_[x]][x] == x,
          "identities do not act neutrally on '" + names_[x] + "'");
    auto const v = inv_[x];
    check(dom_[v] == cod_[x] && comp_[v][x] == dom_[x] && comp_[x][v] == cod_[x],
          "bad inverse for '" + names_[x] + "'");
  }
  for (Arrow x = 0; x < n; ++x) {
    for (Arrow y = 0; y < n; ++y) {
      if (comp_[x][y] == no_arrow) {
        continue;
      }
      for (Arrow z = 0; z < n; ++z) {
        if (comp_[y][z] == no_arrow) {
          continue;
        }
        check(comp_[comp_[x][y]][z] == comp_[x][comp_[y][z]],
              "composition not associative at ('" + names_[x] + "', '" + names_[y] + "', '"
                  + names_[z] + "')");
      }
    }
  }
}

std::vector<Arrow> FiniteGroupoid::hom(Arrow e, Arrow f) const {
  std::vector<Arrow> out;
  for (Arrow x = 0; x < size(); ++x) {
    if (dom_[x] == e && cod_[x] == f) {
      out.push_back(x);
    }
  }
  return out;
}

FiniteGroupoid underlying_groupoid(FiniteInverseSemigroup const& s) {
  std::size_t const         n = s.size();
  std::vector<Arrow>        dom(n), cod(n), inv(n);
  FiniteGroupoid::CompTable comp(n, std::vector<Arrow>(n, no_arrow));
  for (Element a = 0; a < n; ++a) {
    dom[a] = s.d(a);
    cod[a] = s.r(a);
    inv[a] = s.inverse(a);
    for (Element b = 0; b < n; ++b) {
      if (s.d(a) == s.r(b)) {
        comp[a][b] = s.mul(a, b);
      }
    }
  }
  return FiniteGroupoid(s.labels(), std::move(dom), std::move(cod), std::move(comp),
                        std::move(inv));
}

FiniteInverseSemigroup adjoin_zero(FiniteGroupoid const& g) {
  std::string zero = "0";
  while (std::find(g.names().begin(), g.names().end(), zero) != g.names().end()) {
    zero += "'";
  }
  std::vector<std::string> labels{zero};
  labels.insert(labels.end(), g.names().begin(), g.names().end());
  FiniteInverseSemigroup::Table mult(g.size() + 1, std::vector<Element>(g.size() + 1, 0));
  for (Arrow x = 0; x < g.size(); ++x) {
    for (Arrow y = 0; y < g.size(); ++y) {
      if (auto z = g.compose(x, y)) {
        mult[x + 1][y + 1] = *z + 1;
      }
    }
  }
  return FiniteInverseSemigroup::validate_cayley(std::move(labels), mult, Element{0});
}

FiniteGroupoid pair_groupoid(std::size_t n) {
  std::vector<std::pair<Point, Point>> pairs;
  for (Point x = 1; x <= n; ++x) {
    for (Point y = 1; y <= n; ++y) {
      pairs.emplace_back(x, y);
    }
  }
  return groupoid_of_pairs(std::move(pairs));
}

FiniteGroupoid from_equivalence(std::vector<std::vector<Point>> const& classes) {
  std::set<Point>                      seen;
  std::vector<std::pair<Point, Point>> pairs;
  for (auto const& c : classes) {
    check(!c.empty(), "empty equivalence class");
    for (auto x : c) {
      check(seen.insert(x).second, "point " + std::to_string(x) + " in two classes");
      for (auto y : c) {
        pairs.emplace_back(x, y);
      }
    }
  }
  return groupoid_of_pairs(std::move(pairs));
}

FiniteGroupoid one_object_groupoid(FiniteInverseSemigroup const& group) {
  check(group.idempotents().size() == 1, "not a group");
  return underlying_groupoid(group);
}

FiniteGroupoid discrete_groupoid(std::size_t k) {
  std::vector<std::vector<Point>> classes;
  for (Point x = 1; x <= k; ++x) {
    classes.push_back({x});
  }
  return from_equivalence(classes);
}

Partition components(FiniteGroupoid const& g) {
  UnionFind uf(g.size());
  for (Arrow x = 0; x < g.size(); ++x) {
    uf.unite(x, g.dom(x));
    uf.unite(x, g.cod(x));
  }
  return Partition(uf);
}

bool is_principal(FiniteGroupoid const& g) {
  std::set<std::pair<Arrow, Arrow>> ends;
  bool                              by_ends = true;
  for (Arrow x = 0; x < g.size(); ++x) {
    by_ends = ends.emplace(g.dom(x), g.cod(x)).second && by_ends;
  }
  bool const by_groups = std::all_of(g.identities().begin(), g.identities().end(),
                                     [&](Arrow e) { return g.local_group(e).size() == 1; });
  ensure(by_ends == by_groups, "principal groupoid tests disagree");
  return by_ends;
}

bool is_union_of_groups(FiniteGroupoid const& g) {
  for (Arrow x = 0; x < g.size(); ++x) {
    if (g.dom(x) != g.cod(x)) {
      return false;
    }
  }
  return true;
}

std::optional<std::vector<Arrow>> find_groupoid_isomorphism(FiniteGroupoid const& a,
                                                            FiniteGroupoid const& b) {
  if (a.size() != b.size() || a.identities().size() != b.identities().size()) {
    return std::nullopt;
  }
  auto iso = find_isomorphism(adjoin_zero(a), adjoin_zero(b));
  if (!iso) {
    return std::nullopt;
  }
  ensure((*iso)[0] == 0, "isomorphism does not fix the adjoined zero");
  std::vector<Arrow> out(a.size());
  for (Arrow x = 0; x < a.size(); ++x) {
    out[x] = (*iso)[x + 1] - 1;
  }
  return out;
}

std::vector<Element> atoms(FiniteInverseSemigroup const& s) {
  auto const           z = s.zero_or_throw();
  std::vector<Element> out;
  for (Element a = 0; a < s.size(); ++a) {
    if (a != z && strictly_below(s, a) == std::vector<Element>{z}) {
      out.push_back(a);
    }
  }
  std::set<Element> const set(out.begin(), out.end());
  for (auto a : out) {
    ensure(set.count(s.inverse(a)) == 1, "inverse of an atom is not an atom");
    for (auto b : out) {
      if (s.d(a) == s.r(b)) {
        ensure(set.count(s.mul(a, b)) == 1, "restricted product of atoms is not an atom");
      }
    }
  }
  return out;
}

FiniteGroupoid atomic_groupoid(FiniteInverseSemigroup const& s) {
  auto const               at = atoms(s);
  std::map<Element, Arrow> index;
  for (Arrow i = 0; i < at.size(); ++i) {
    index[at[i]] = i;
  }
  std::size_t const         n = at.size();
  std::vector<std::string>  names;
  std::vector<Arrow>        dom(n), cod(n), inv(n);
  FiniteGroupoid::CompTable comp(n, std::vector<Arrow>(n, no_arrow));
  for (Arrow i = 0; i < n; ++i) {
    auto const a = at[i];
    names.push_back(s.label(a));
    dom[i] = index.at(s.d(a));
    cod[i] = index.at(s.r(a));
    inv[i] = index.at(s.inverse(a));
    for (Arrow j = 0; j < n; ++j) {
      if (s.d(a) == s.r(at[j])) {
        comp[i][j] = index.at(s.mul(a, at[j]));
      }
    }
  }
  return FiniteGroupoid(std::move(names), std::move(dom), std::move(cod), std::move(comp),
                        std::move(inv));
}

std::optional<Element> BisectionMonoid::index_of(std::vector<Arrow> const& arrows) const {
  auto it = index.find(arrows);
  return it == index.end() ? std::nullopt : std::optional<Element>(it->second);
}

std::vector<std::vector<Arrow>> enumerate_local_bisections(FiniteGroupoid const& g,
                                                           std::size_t bound) {
  auto const&                     ids = g.identities();
  std::vector<std::vector<Arrow>> out_of(g.size());
  for (Arrow x = 0; x < g.size(); ++x) {
    out_of[g.dom(x)].push_back(x);
  }
  std::vector<std::vector<Arrow>> found;
  std::vector<bool>               cod_used(g.size(), false);
  std::vector<Arrow>              chosen;
  auto search = [&](auto&& self, std::size_t i) -> void {
    if (i == ids.size()) {
      if (found.size() >= bound) {
        fail(ErrorCode::BoundExceeded,
             "more than " + std::to_string(bound) + " local bisections");
      }
      auto a = chosen;
      std::sort(a.begin(), a.end());
      found.push_back(std::move(a));
      return;
    }
    self(self, i + 1);
    for (auto x : out_of[ids[i]]) {
      if (cod_used[g.cod(x)]) {
        continue;
      }
      cod_used[g.cod(x)] = true;
      chosen.push_back(x);
      self(self, i + 1);
      chosen.pop_back();
      cod_used[g.cod(x)] = false;
    }
  };
  search(search, 0);
  std::sort(found.begin(), found.end(), canonical_less);
  return found;
}

std::vector<std::vector<Arrow>> local_bisections_by_subsets(FiniteGroupoid const& g) {
  require(g.size() <= 16, ErrorCode::BoundExceeded, "subset filtering needs at most 16 arrows");
  std::vector<std::vector<Arrow>> found;
  for (std::uint32_t mask = 0; mask < (1U << g.size()); ++mask) {
    std::vector<Arrow> a;
    for (Arrow x = 0; x < g.size(); ++x) {
      if ((mask >> x) & 1U) {
        a.push_back(x);
      }
    }
    // A A^-1 and A^-1 A consist of identities.
    bool ok = true;
    for (auto x : a) {
      for (auto y : a) {
        auto const xy_inv = g.compose(x, g.inverse(y));
        auto const x_inv_y = g.compose(g.inverse(x), y);
        ok = ok && (!xy_inv || g.is_identity(*xy_inv)) && (!x_inv_y || g.is_identity(*x_inv_y));
      }
    }
    if (ok) {
      found.push_back(std::move(a));
    }
  }
  std::sort(found.begin(), found.end(), canonical_less);
  return found;
}

BisectionMonoid local_bisections(FiniteGroupoid g, std::size_t bound) {
  auto subsets = enumerate_local_bisections(g, bound);
  if (g.size() <= 16) {
    ensure(subsets == local_bisections_by_subsets(g), "local bisection enumerators disagree");
  }
  std::size_t const                     n = subsets.size();
  std::map<std::vector<Arrow>, Element> index;
  std::vector<std::string>              labels;
  for (Element i = 0; i < n; ++i) {
    index[subsets[i]] = i;
    std::string label = "{";
    for (std::size_t k = 0; k < subsets[i].size(); ++k) {
      label += (k ? "; " : "") + g.name(subsets[i][k]);
    }
    labels.push_back(label + "}");
  }
  FiniteInverseSemigroup::Table mult(n, std::vector<Element>(n));
  std::vector<Arrow>            product;
  for (Element i = 0; i < n; ++i) {
    for (Element j = 0; j < n; ++j) {
      product.clear();
      for (auto x : subsets[i]) {
        for (auto y : subsets[j]) {
          if (auto z = g.compose(x, y)) {
            product.push_back(*z);
          }
        }
      }
      std::sort(product.begin(), product.end());
      auto it = index.find(product);
      ensure(it != index.end(), "product of local bisections is not a local bisection");
      mult[i][j] = it->second;
    }
  }
  auto const one  = index.at(g.identities());
  auto const gens = greedy_generators(mult);
  auto       s    = share(FiniteInverseSemigroup::validate_cayley(std::move(labels), mult,
                                                                  Element{0}, one, gens));
  return BisectionMonoid{std::move(g), std::move(s), std::move(subsets), std::move(index)};
}

AtomIso atom_iso(SemigroupPtr const& s) {
  auto const cert = boolean_certificate(s);
  auto const at   = atoms(*s);
  auto       k    = local_bisections(atomic_groupoid(*s));
  std::vector<Element> map(s->size());
  for (Element a = 0; a < s->size(); ++a) {
    std::vector<Arrow>   below;
    std::vector<Element> below_elements;
    for (Arrow i = 0; i < at.size(); ++i) {
      if (s->leq(at[i], a)) {
        below.push_back(i);
        below_elements.push_back(at[i]);
      }
    }
    auto idx = k.index_of(below);
    ensure(idx.has_value(), "atoms below an element do not form a local bisection");
    map[a] = *idx;
    ensure(join(*s, below_elements) == a, "element is not the join of the atoms below it");
  }
  auto theta = make_homomorphism(s, k.semigroup, std::move(map));
  std::set<Element> const image(theta.map.begin(), theta.map.end());
  ensure(image.size() == s->size() && k.semigroup->size() == s->size(),
         "atom map is not a bijection");
  return AtomIso{std::move(k), std::move(theta)};
}

DownsetEmbedding downset_embedding(SemigroupPtr const& s, std::size_t bound) {
  auto const one = s->one_or_throw();
  auto       k   = local_bisections(underlying_groupoid(*s), bound);
  std::vector<Element> map(s->size());
  for (Element a = 0; a < s->size(); ++a) {
    auto idx = k.index_of(down_set(*s, a));
    ensure(idx.has_value(), "a down-set is not a local bisection");
    map[a] = *idx;
  }
  auto beta = make_homomorphism(s, k.semigroup, std::move(map));
  std::set<Element> const image(beta.map.begin(), beta.map.end());
  ensure(image.size() == s->size(), "down-set map is not injective");
  ensure(beta(one) == *k.semigroup->one(), "down-set map does not preserve the identity");
  return DownsetEmbedding{std::move(k), std::move(beta)};
}

namespace {

void require_monoid_hom(Homomorphism const& alpha) {
  if (!is_multiplicative(alpha)) {
    fail(ErrorCode::NotAHomomorphism, "map is not multiplicative");
  }
  auto const one = alpha.source->one_or_throw();
  if (alpha(one) != alpha.target->one_or_throw()) {
    fail(ErrorCode::NotAHomomorphism, "map does not preserve the identity");
  }
}

}  // namespace

Homomorphism extend_to_bisections(Homomorphism const& alpha, DownsetEmbedding const& beta) {
  auto const& s    = *alpha.source;
  auto const& t    = *alpha.target;
  auto const  cert = boolean_certificate(alpha.target);
  require_monoid_hom(alpha);
  require(beta.beta.source->size() == s.size(), ErrorCode::NotAHomomorphism,
          "down-set embedding is for a different semigroup");

  std::vector<Element> singleton(s.size());
  for (Element a = 0; a < s.size(); ++a) {
    std::vector<Element> lower;
    for (auto b : strictly_below(s, a)) {
      lower.push_back(alpha(b));
    }
    auto j = join(t, lower);
    ensure(j.has_value(), "images of a down-set have no join");
    singleton[a] = relative_complement(cert, alpha(a), *j);
  }
  auto const&          k = beta.bisections;
  std::vector<Element> map(k.subsets.size());
  for (Element i = 0; i < k.subsets.size(); ++i) {
    std::vector<Element> parts;
    for (auto a : k.subsets[i]) {
      parts.push_back(singleton[a]);
    }
    auto j = join(t, parts);
    ensure(j.has_value(), "images of a local bisection have no join");
    map[i] = *j;
  }
  auto gamma = make_homomorphism(k.semigroup, alpha.target, std::move(map));
  for (Element a = 0; a < s.size(); ++a) {
    ensure(gamma(beta.beta(a)) == alpha(a), "extension does not restrict to alpha");
  }
  ensure(gamma(*k.semigroup->zero()) == *t.zero(), "extension does not preserve zero");
  ensure(gamma(*k.semigroup->one()) == *t.one(), "extension does not preserve the identity");
  return gamma;
}

Homomorphism extend_to_bisections(Homomorphism const& alpha) {
  return extend_to_bisections(alpha, downset_embedding(alpha.source));
}

std::size_t count_extensions(Homomorphism const& alpha, DownsetEmbedding const& beta,
                             std::size_t limit) {
  auto const& s    = *alpha.source;
  auto const& t    = *alpha.target;
  auto const& k    = beta.bisections;
  auto const  cert = boolean_certificate(alpha.target);
  auto const  zero = *t.zero();
  auto const  h    = heights(s);

  std::vector<Element> order(s.size());
  for (Element a = 0; a < s.size(); ++a) {
    order[a] = a;
  }
  std::stable_sort(order.begin(), order.end(), [&](Element a, Element b) { return h[a] < h[b]; });
  std::vector<std::vector<Element>> below(s.size());
  for (Element a = 0; a < s.size(); ++a) {
    below[a] = strictly_below(s, a);
  }

  std::vector<Element> image(s.size(), no_element);
  std::size_t          count = 0;

  // {a}{b} is {ab} when d(a) = r(b) and empty otherwise.
  auto consistent = [&](Element a) {
    for (Element b = 0; b < s.size(); ++b) {
      if (image[b] == no_element) {
        continue;
      }
      for (auto [x, y] : {std::pair{a, b}, std::pair{b, a}}) {
        auto const got = t.mul(image[x], image[y]);
        if (s.d(x) == s.r(y)) {
          auto const want = image[s.mul(x, y)];
          if (want != no_element && got != want) {
            return false;
          }
        } else if (got != zero) {
          return false;
        }
      }
    }
    return true;
  };

  auto complete = [&]() {
    std::vector<Element> map(k.subsets.size());
    for (Element i = 0; i < k.subsets.size(); ++i) {
      std::vector<Element> parts;
      for (auto a : k.subsets[i]) {
        parts.push_back(image[a]);
      }
      auto j = join(t, parts);
      if (!j) {
        return false;
      }
      map[i] = *j;
    }
    return is_multiplicative(Homomorphism{k.semigroup, alpha.target, std::move(map)});
  };

  auto search = [&](auto&& self, std::size_t i) -> void {
    if (count >= limit) {
      return;
    }
    if (i == order.size()) {
      if (complete()) {
        ++count;
      }
      return;
    }
    auto const           a = order[i];
    std::vector<Element> lower;
    for (auto b : below[a]) {
      lower.push_back(image[b]);
    }
    auto const j = join(t, lower);
    if (!j) {
      return;
    }
    for (Element c = 0; c < t.size(); ++c) {
      if (cert.join(c, *j) != alpha(a)) {
        continue;
      }
      image[a] = c;
      if (consistent(a)) {
        self(self, i + 1);
      }
      image[a] = no_element;
    }
  };
  search(search, 0);
  return count;
}

namespace {

std::string quoted(std::string const& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') {
      out += '\\';
    }
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_dot(FiniteGroupoid const& g) {
  std::ostringstream out;
  out << "digraph groupoid {\n";
  for (auto e : g.identities()) {
    out << "  " << quoted(g.name(e)) << ";\n";
  }
  for (Arrow x = 0; x < g.size(); ++x) {
    if (!g.is_identity(x)) {
      out << "  " << quoted(g.name(g.dom(x))) << " -> " << quoted(g.name(g.cod(x)))
          << " [label=" << quoted(g.name(x)) << "];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace invsg
