#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "corpus.hpp"
#include "invsg/boolean.hpp"
#include "invsg/catalog.hpp"
#include "invsg/errors.hpp"
#include "invsg/greens.hpp"
#include "invsg/groupoid.hpp"
#include "invsg/order.hpp"
#include "invsg/predicates.hpp"

using namespace invsg;
using catalog::boolean_semilattice;
using catalog::cyclic_group;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (Error const& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::ParseError;
}

// Local bisections straight from the definition: A A^-1 and A^-1 A consist
// of identities.
std::set<std::set<Arrow>> brute_bisections(FiniteGroupoid const& g) {
  std::set<std::set<Arrow>> out;
  std::size_t const         n = g.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<Arrow> a;
    for (Arrow x = 0; x < n; ++x) {
      if (mask >> x & 1) {
        a.push_back(x);
      }
    }
    bool ok = true;
    for (auto x : a) {
      for (auto y : a) {
        if (auto z = g.compose(x, g.inverse(y))) {
          ok = ok && g.is_identity(*z);
        }
        if (auto z = g.compose(g.inverse(x), y)) {
          ok = ok && g.is_identity(*z);
        }
      }
    }
    if (ok) {
      out.insert(std::set<Arrow>(a.begin(), a.end()));
    }
  }
  return out;
}

// Groupoid isomorphism by trying every arrow permutation.
bool brute_groupoid_iso(FiniteGroupoid const& a, FiniteGroupoid const& b) {
  if (a.size() != b.size()) {
    return false;
  }
  std::vector<Arrow> p(a.size());
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (Arrow x = 0; x < a.size() && ok; ++x) {
      for (Arrow y = 0; y < a.size() && ok; ++y) {
        auto const l = a.compose(x, y);
        auto const r = b.compose(p[x], p[y]);
        ok = l.has_value() == r.has_value() && (!l || p[*l] == *r);
      }
    }
    if (ok) {
      return true;
    }
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

std::vector<FiniteGroupoid> sample_groupoids() {
  return {pair_groupoid(1),
          pair_groupoid(2),
          pair_groupoid(3),
          one_object_groupoid(cyclic_group(2)),
          one_object_groupoid(cyclic_group(3)),
          corpus::equivalence_groupoid(),
          discrete_groupoid(3),
          from_equivalence({{1}, {2, 3}})};
}

// Maps K -> T that are zero-preserving, multiplicative, preserve binary
// compatible joins and agree with alpha on beta's image, counted by
// backtracking over the remaining elements.
std::size_t brute_extensions(Homomorphism const& alpha, DownsetEmbedding const& beta) {
  auto const& k = *beta.bisections.semigroup;
  auto const& t = *alpha.target;
  std::vector<Element> fixed(k.size(), no_element);
  for (Element a = 0; a < alpha.source->size(); ++a) {
    fixed[beta.beta(a)] = alpha(a);
  }
  fixed[*k.zero()] = *t.zero();
  std::vector<Element> free;
  for (Element x = 0; x < k.size(); ++x) {
    if (fixed[x] == no_element) {
      free.push_back(x);
    }
  }
  std::size_t          count = 0;
  std::vector<Element> img   = fixed;
  auto                 check = [&] {
    for (Element x = 0; x < k.size(); ++x) {
      for (Element y = 0; y < k.size(); ++y) {
        if (img[k.mul(x, y)] != t.mul(img[x], img[y])) {
          return false;
        }
        if (auto j = join(k, x, y)) {
          if (join(t, img[x], img[y]) != img[*j]) {
            return false;
          }
        }
      }
    }
    return true;
  };
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == free.size()) {
      count += check() ? 1 : 0;
      return;
    }
    for (Element v = 0; v < t.size(); ++v) {
      img[free[i]] = v;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return count;
}

}  // namespace

TEST_CASE("groupoid axioms are enforced") {
  // One arrow whose inverse composite is not an identity.
  CHECK(code_of([] { FiniteGroupoid({"a", "x"}, {0, 0}, {0, 0}, {{0, 1}, {1, 1}}, {0, 1}); }) ==
        ErrorCode::InvalidGroupoid);
  CHECK(code_of([] { FiniteGroupoid({"a"}, {0}, {0}, {{no_arrow}}, {0}); }) ==
        ErrorCode::InvalidGroupoid);
  CHECK_NOTHROW(FiniteGroupoid({"a"}, {0}, {0}, {{0}}, {0}));
}

TEST_CASE("constructions") {
  auto const p3 = pair_groupoid(3);
  CHECK(p3.size() == 9);
  CHECK(p3.identities().size() == 3);
  CHECK(is_principal(p3));
  CHECK(components(p3).is_universal());
  auto const z2 = one_object_groupoid(cyclic_group(2));
  CHECK_FALSE(is_principal(z2));
  CHECK(is_union_of_groups(z2));
  auto const eq = corpus::equivalence_groupoid();
  CHECK(is_principal(eq));
  std::multiset<std::size_t> sizes;
  for (auto const& c : components(eq).classes()) {
    sizes.insert(c.size());
  }
  CHECK(sizes == std::multiset<std::size_t>{4, 1});
  auto const d = discrete_groupoid(3);
  CHECK(d.identities().size() == 3);
  CHECK(is_union_of_groups(d));
  CHECK(is_principal(d));
  // (x,y)(y,z) = (x,z)
  for (Arrow x = 0; x < p3.size(); ++x) {
    for (Arrow y = 0; y < p3.size(); ++y) {
      auto const z = p3.compose(x, y);
      CHECK(z.has_value() == (p3.dom(x) == p3.cod(y)));
      if (z) {
        CHECK(p3.cod(*z) == p3.cod(x));
        CHECK(p3.dom(*z) == p3.dom(y));
      }
    }
  }
}

TEST_CASE("adjoining a zero") {
  CHECK(are_isomorphic(adjoin_zero(pair_groupoid(2)), *corpus::b2()));
  CHECK(are_isomorphic(adjoin_zero(one_object_groupoid(cyclic_group(2))), *corpus::z2_zero()));
  auto const d3 = adjoin_zero(discrete_groupoid(3));
  CHECK(d3.size() == 4);
  CHECK(is_meet_semilattice(d3));
  for (auto const& g : sample_groupoids()) {
    auto const s = adjoin_zero(g);
    CHECK(s.size() == g.size() + 1);
    for (Element a = 0; a < s.size(); ++a) {
      for (Element b = 0; b < s.size(); ++b) {
        CHECK(s.leq(a, b) == (a == b || a == *s.zero()));
      }
    }
  }
}

TEST_CASE("underlying groupoids") {
  auto const gz = underlying_groupoid(*corpus::z3());
  CHECK(gz.identities().size() == 1);
  CHECK(gz.size() == 3);
  auto const gc = underlying_groupoid(*corpus::chain3());
  CHECK(gc.identities().size() == 3);
  auto const i2 = corpus::sym(2);
  auto const gi = underlying_groupoid(*i2);
  CHECK(components(gi).class_count() == 3);
  auto const full = i2->at("id:1,2");
  CHECK(gi.local_group(full).size() == 2);
  for (auto const& e : corpus::all()) {
    auto const& s = *e.s;
    auto const  g = underlying_groupoid(s);
    CHECK(g.size() == s.size());
    for (Element a = 0; a < s.size(); ++a) {
      for (Element b = 0; b < s.size(); ++b) {
        auto const c = g.compose(a, b);
        CHECK(c.has_value() == (s.d(a) == s.r(b)));
        if (c) {
          CHECK(*c == s.mul(a, b));
        }
      }
    }
    CHECK(is_clifford(s) == is_union_of_groups(g));
  }
}

TEST_CASE("restricted product factorization and the J criterion") {
  for (auto const& e : corpus::all()) {
    auto const& s = *e.s;
    auto const  d = greens(s).D;
    auto const  n = s.size();
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        bool found = false;
        for (auto a1 : down_set(s, a)) {
          for (auto b1 : down_set(s, b)) {
            found = found || (s.d(a1) == s.r(b1) && s.mul(a1, b1) == s.mul(a, b));
          }
        }
        CHECK(found);
        auto const ia = principal_ideal(s, a);
        auto const ib = principal_ideal(s, b);
        bool const contained = std::includes(ib.begin(), ib.end(), ia.begin(), ia.end());
        bool       witness   = false;
        for (auto b1 : down_set(s, b)) {
          witness = witness || d.same(a, b1);
        }
        CHECK(contained == witness);
      }
    }
  }
}

TEST_CASE("atoms") {
  auto const i2 = corpus::sym(2);
  auto const a  = atoms(*i2);
  CHECK(a.size() == 4);
  for (auto x : a) {
    CHECK(i2->label(x).find(',') == std::string::npos);
  }
  CHECK(are_isomorphic(atomic_groupoid(*i2), pair_groupoid(2)));
  auto const b2 = corpus::b2();
  CHECK(atoms(*b2).size() == 4);
  auto const c2 = corpus::chain2();
  CHECK(atoms(*c2) == std::vector<Element>{1 - *c2->zero()});
  CHECK(code_of([] { atoms(*corpus::z2()); }) == ErrorCode::NoZero);
  for (auto const& e : corpus::all()) {
    auto const& s = *e.s;
    if (!s.has_zero()) {
      continue;
    }
    auto const at = atoms(s);
    std::set<Element> set(at.begin(), at.end());
    for (auto x : at) {
      CHECK(set.count(s.inverse(x)) == 1);
      for (auto y : at) {
        if (s.d(x) == s.r(y)) {
          CHECK(set.count(s.mul(x, y)) == 1);
        }
        if (x != y && compatible(s, x, y)) {
          CHECK(orthogonal(s, x, y));
        }
      }
    }
  }
}

TEST_CASE("local bisections agree with subset filtering") {
  for (auto const& g : sample_groupoids()) {
    auto const brute = brute_bisections(g);
    auto const lib   = enumerate_local_bisections(g);
    std::set<std::set<Arrow>> got;
    for (auto const& a : lib) {
      got.insert(std::set<Arrow>(a.begin(), a.end()));
    }
    CHECK(got == brute);
    CHECK(lib.size() == brute.size());
    auto by_subsets = local_bisections_by_subsets(g);
    std::sort(by_subsets.begin(), by_subsets.end());
    auto sorted = lib;
    std::sort(sorted.begin(), sorted.end());
    CHECK(by_subsets == sorted);
  }
  CHECK(code_of([] { local_bisections(pair_groupoid(4), 100); }) == ErrorCode::BoundExceeded);
}

TEST_CASE("bisection monoid examples") {
  auto const kp = local_bisections(pair_groupoid(2));
  CHECK(kp.semigroup->size() == 7);
  CHECK(are_isomorphic(*kp.semigroup, *corpus::sym(2)));
  auto const kz = local_bisections(one_object_groupoid(cyclic_group(2)));
  CHECK(kz.semigroup->size() == 3);
  auto const kd = local_bisections(discrete_groupoid(3));
  CHECK(are_isomorphic(*kd.semigroup, boolean_semilattice(3)));
  CHECK(local_bisections(pair_groupoid(3)).semigroup->size() == 34);
}

TEST_CASE("bisection monoids are Boolean with singleton atoms") {
  for (auto const& g : sample_groupoids()) {
    auto const k = local_bisections(g);
    auto const& s = *k.semigroup;
    CHECK(s.one().has_value());
    CHECK(k.subsets[*s.zero()].empty());
    CHECK(k.subsets[*s.one()] == g.identities());
    CHECK(is_boolean(k.semigroup).has_value());
    for (Element a = 0; a < s.size(); ++a) {
      for (Element b = 0; b < s.size(); ++b) {
        auto const& sa = k.subsets[a];
        auto const& sb = k.subsets[b];
        CHECK(s.leq(a, b) == std::includes(sb.begin(), sb.end(), sa.begin(), sa.end()));
        std::vector<Arrow> u;
        std::set_union(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(u));
        CHECK(compatible(s, a, b) == k.index_of(u).has_value());
        // Set product.
        std::set<Arrow> prod;
        for (auto x : sa) {
          for (auto y : sb) {
            if (auto z = g.compose(x, y)) {
              prod.insert(*z);
            }
          }
        }
        CHECK(std::vector<Arrow>(prod.begin(), prod.end()) == k.subsets[s.mul(a, b)]);
      }
    }
    auto const at = atoms(s);
    CHECK(at.size() == g.size());
    for (auto x : at) {
      CHECK(k.subsets[x].size() == 1);
    }
    CHECK(are_isomorphic(atomic_groupoid(s), g));
  }
}

TEST_CASE("groupoid isomorphism matches brute force") {
  auto const gs = sample_groupoids();
  for (auto const& a : gs) {
    for (auto const& b : gs) {
      if (a.size() > 8 || b.size() > 8) {
        continue;
      }
      CHECK(are_isomorphic(a, b) == brute_groupoid_iso(a, b));
    }
  }
  CHECK(are_isomorphic(from_equivalence({{1}, {2, 3}}), corpus::equivalence_groupoid()));
  CHECK_FALSE(are_isomorphic(pair_groupoid(2), discrete_groupoid(4)));
}

TEST_CASE("atom iso") {
  auto const i2 = corpus::sym(2);
  auto const ai = atom_iso(i2);
  CHECK(hom_checks(ai.theta).is_injective);
  CHECK(hom_checks(ai.theta).is_surjective);
  auto const& sub = ai.bisections.subsets;
  auto const  at  = atoms(*i2);
  for (Element a = 0; a < i2->size(); ++a) {
    // a partial bijection is the set of its point moves.
    std::set<std::string> moves;
    for (auto x : sub[ai.theta(a)]) {
      moves.insert(i2->label(at[x]));
    }
    std::set<std::string> expected;
    auto const            label = i2->label(a);
    auto const            f     = PartialBijection::parse(label, 2);
    for (Point p = 1; p <= 2; ++p) {
      if (auto q = f(p)) {
        expected.insert(std::to_string(p) + ">" + std::to_string(*q));
      }
    }
    std::set<std::string> normalized;
    for (auto const& m : moves) {
      auto const g = PartialBijection::parse(m, 2);
      for (Point p = 1; p <= 2; ++p) {
        if (auto q = g(p)) {
          normalized.insert(std::to_string(p) + ">" + std::to_string(*q));
        }
      }
    }
    CHECK(normalized == expected);
  }
  CHECK(code_of([] { atom_iso(corpus::chain3()); }) == ErrorCode::NotBoolean);
  CHECK(code_of([] { atom_iso(corpus::b2()); }) == ErrorCode::NotAMonoid);
  for (auto const& e : corpus::all()) {
    if (!e.s->has_zero() || !e.s->one() || !is_boolean(e.s)) {
      continue;
    }
    if (e.s->size() > 40) {
      continue;
    }
    CAPTURE(e.name);
    auto const iso = atom_iso(e.s);
    CHECK(hom_checks(iso.theta).is_injective);
    CHECK(hom_checks(iso.theta).is_surjective);
    auto const at = atoms(*e.s);
    for (Element a = 0; a < e.s->size(); ++a) {
      std::vector<Element> below;
      for (auto x : iso.bisections.subsets[iso.theta(a)]) {
        below.push_back(at[x]);
      }
      CHECK(join(*e.s, below) == a);
    }
  }
}

TEST_CASE("downset embedding") {
  auto const z3 = corpus::z3();
  auto const bz = downset_embedding(z3);
  for (Element a = 0; a < 3; ++a) {
    CHECK(bz.bisections.subsets[bz.beta(a)] == std::vector<Arrow>{a});
  }
  auto const i2 = corpus::sym(2);
  auto const bi = downset_embedding(i2);
  CHECK(bi.bisections.subsets[bi.beta(*i2->one())] == i2->idempotents());
  CHECK(bi.beta(*i2->one()) == *bi.bisections.semigroup->one());
  CHECK(hom_checks(bi.beta).is_injective);
  CHECK(code_of([] { downset_embedding(corpus::b2()); }) == ErrorCode::NotAMonoid);
  auto const c3 = corpus::chain3();
  auto const bc = downset_embedding(c3);
  for (Element a = 0; a < 3; ++a) {
    CHECK(bc.bisections.subsets[bc.beta(a)] == down_set(*c3, a));
  }
}

TEST_CASE("extension to bisections") {
  // alpha = beta gives the identity.
  for (auto const& s : {corpus::sym(2), corpus::z2(), corpus::chain3(), corpus::square()}) {
    auto const b = downset_embedding(s);
    Homomorphism alpha{s, b.bisections.semigroup, b.beta.map};
    auto const g = extend_to_bisections(alpha, b);
    for (Element x = 0; x < g.source->size(); ++x) {
      CHECK(g(x) == x);
    }
  }
  // Group embedded as singletons: gamma is the join of singleton images.
  auto const z2 = corpus::z2();
  auto const bz = downset_embedding(z2);
  Homomorphism alpha{z2, bz.bisections.semigroup, bz.beta.map};
  auto const gz = extend_to_bisections(alpha, bz);
  CHECK(gz.source->size() == 3);

  // 2-chain into the 2^2 bisection monoid by the order embedding.
  auto const c2 = corpus::chain2();
  auto const t  = local_bisections(discrete_groupoid(2));
  auto const& ts = *t.semigroup;
  Element    e0 = no_element;
  for (Element x = 0; x < ts.size(); ++x) {
    if (t.subsets[x].size() == 1 && e0 == no_element) {
      e0 = x;
    }
  }
  std::vector<Element> map(2);
  map[*c2->zero()] = e0;
  map[*c2->one()]  = *ts.one();
  auto const a2 = make_homomorphism(c2, t.semigroup, map);
  auto const b2 = downset_embedding(c2);
  auto const g2 = extend_to_bisections(a2, b2);
  auto const& ks = b2.bisections.semigroup;
  auto const top = b2.beta(*c2->one());
  auto const cert = boolean_certificate(t.semigroup);
  auto const singleton_one = b2.bisections.index_of({*c2->one()});
  REQUIRE(singleton_one.has_value());
  CHECK(g2(*singleton_one) == relative_complement(cert, *ts.one(), e0));
  for (Element x = 0; x < ks->size(); ++x) {
    CHECK(g2(b2.beta(x < c2->size() ? x : 0)) == a2(x < c2->size() ? x : 0));
  }
  CHECK(g2(top) == *ts.one());
  CHECK(count_extensions(a2, b2) == 1);
  CHECK(brute_extensions(a2, b2) == 1);
}

TEST_CASE("extension uniqueness matches brute force on small cases") {
  std::vector<SemigroupPtr> sources{corpus::chain2(), corpus::z2(), corpus::trivial(),
                                    corpus::z2_zero()};
  std::vector<SemigroupPtr> targets{corpus::chain2(), corpus::square(), corpus::k_z2(),
                                    corpus::sym(2)};
  std::size_t checked = 0;
  for (auto const& s : sources) {
    auto const b = downset_embedding(s);
    for (auto const& t : targets) {
      for (auto const& alpha : enumerate_homomorphisms(s, t)) {
        if (alpha(*s->one()) != *t->one()) {
          continue;
        }
        auto const n = brute_extensions(alpha, b);
        CHECK(count_extensions(alpha, b, 8) == n);
        if (n == 1) {
          auto const g = extend_to_bisections(alpha, b);
          for (Element a = 0; a < s->size(); ++a) {
            CHECK(g(b.beta(a)) == alpha(a));
          }
        }
        ++checked;
      }
    }
  }
  CHECK(checked > 10);
}

TEST_CASE("DOT export") {
  auto const dot = to_dot(pair_groupoid(2));
  CHECK(dot.rfind("digraph groupoid {", 0) == 0);
  CHECK(dot.find("label=\"(1,2)\"") != std::string::npos);
  CHECK(dot.find("label=\"(1,1)\"") == std::string::npos);
  CHECK(dot == to_dot(pair_groupoid(2)));
}
