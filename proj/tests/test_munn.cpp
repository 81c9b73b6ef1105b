#include <doctest.h>

#include <algorithm>
#include <set>

#include "corpus.hpp"
#include "invsg/catalog.hpp"
#include "invsg/closure.hpp"
#include "invsg/congruence.hpp"
#include "invsg/errors.hpp"
#include "invsg/predicates.hpp"
#include "invsg/munn.hpp"

using namespace invsg;

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

MeetSemilattice from_table(FiniteInverseSemigroup::Table const& t) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < t.size(); ++i) {
    labels.push_back("e" + std::to_string(i));
  }
  return semilattice_from_band(labels, t);
}

// T_E as a set of partial maps, found by trying every bijection between
// every pair of principal ideals.
std::set<std::vector<std::pair<Element, Element>>> brute_munn(MeetSemilattice const& e) {
  std::set<std::vector<std::pair<Element, Element>>> out;
  for (Element a = 0; a < e.size(); ++a) {
    for (Element b = 0; b < e.size(); ++b) {
      auto const da = e.down(a);
      auto       db = e.down(b);
      if (da.size() != db.size()) {
        continue;
      }
      std::sort(db.begin(), db.end());
      do {
        bool iso = true;
        for (std::size_t i = 0; i < da.size(); ++i) {
          for (std::size_t j = 0; j < da.size(); ++j) {
            iso = iso && e.leq(da[i], da[j]) == e.leq(db[i], db[j]);
          }
        }
        if (iso) {
          std::vector<std::pair<Element, Element>> m;
          for (std::size_t i = 0; i < da.size(); ++i) {
            m.emplace_back(da[i], db[i]);
          }
          out.insert(m);
        }
      } while (std::next_permutation(db.begin(), db.end()));
    }
  }
  return out;
}

}  // namespace

TEST_CASE("semilattices from bands") {
  auto const i2 = corpus::sym(2);
  auto const e  = idempotent_semilattice(*i2);
  CHECK(e.size() == 4);
  CHECK(are_isomorphic(FiniteInverseSemigroup::validate_cayley(e.labels(), e.table()),
                       catalog::boolean_semilattice(2)));
  auto const chain = from_table({{0, 0, 0}, {0, 1, 1}, {0, 1, 2}});
  CHECK(chain.leq(0, 1));
  CHECK(chain.leq(1, 2));
  CHECK(chain.down(2) == std::vector<Element>{0, 1, 2});
  auto const vee = from_table({{0, 0, 0}, {0, 1, 0}, {0, 0, 2}});
  CHECK_FALSE(vee.leq(1, 2));
  CHECK(vee.down(1) == std::vector<Element>{0, 1});
  CHECK(code_of([] { from_table({{1, 1}, {0, 0}}); }) == ErrorCode::NotABand);
  CHECK(code_of([] { from_table({{0, 0}, {1, 1}}); }) == ErrorCode::NotCommutative);
  for (auto const& entry : corpus::all()) {
    auto const m = idempotent_semilattice(*entry.s);
    CHECK(m.size() == entry.s->idempotents().size());
    for (Element a = 0; a < m.size(); ++a) {
      for (Element b = 0; b < m.size(); ++b) {
        auto const c = m.meet(a, b);
        CHECK(m.leq(c, a));
        CHECK(m.leq(c, b));
        for (Element d = 0; d < m.size(); ++d) {
          if (m.leq(d, a) && m.leq(d, b)) {
            CHECK(m.leq(d, c));
          }
        }
      }
    }
  }
}

TEST_CASE("Munn semigroup examples") {
  auto const c2 = munn_semigroup(from_table({{0, 0}, {0, 1}}));
  CHECK(c2.semigroup->size() == 2);
  auto const vee = munn_semigroup(from_table({{0, 0, 0}, {0, 1, 0}, {0, 0, 2}}));
  CHECK(vee.semigroup->size() == 5);
  CHECK(are_isomorphic(*vee.semigroup, *corpus::b2()));
  auto const sq = munn_semigroup(idempotent_semilattice(*corpus::sym(2)));
  CHECK(are_isomorphic(*sq.semigroup, *corpus::sym(2)));
  CHECK(code_of([] {
          munn_semigroup(idempotent_semilattice(*corpus::sym(3)), 4);
        }) == ErrorCode::BoundExceeded);
}

TEST_CASE("Munn semigroups match exhaustive search") {
  std::vector<MeetSemilattice> es;
  for (auto const& entry : corpus::all()) {
    es.push_back(idempotent_semilattice(*entry.s));
  }
  es.push_back(idempotent_semilattice(catalog::chain_semilattice(4)));
  es.push_back(idempotent_semilattice(catalog::boolean_semilattice(3)));
  for (auto const& e : es) {
    auto const t = munn_semigroup(e);
    std::set<std::vector<std::pair<Element, Element>>> got;
    for (auto const& iso : t.isos) {
      got.insert(iso.map);
    }
    CHECK(got == brute_munn(e));
    CHECK(got.size() == t.semigroup->size());
    // Idempotents are exactly the identity maps, and E(T_E) is E.
    auto const& ts = *t.semigroup;
    for (Element x = 0; x < ts.size(); ++x) {
      auto const& iso = t.isos[x];
      bool        identity = iso.from == iso.to;
      for (auto const& [p, q] : iso.map) {
        identity = identity && p == q;
      }
      CHECK(ts.is_idempotent(x) == identity);
      CHECK(t.maps[x].rank() == iso.map.size());
      for (auto const& [p, q] : iso.map) {
        CHECK(t.maps[x](static_cast<Point>(p + 1)) == static_cast<Point>(q + 1));
      }
    }
    auto const et = idempotent_semilattice(ts);
    CHECK(are_isomorphic(FiniteInverseSemigroup::validate_cayley(et.labels(), et.table()),
                         FiniteInverseSemigroup::validate_cayley(e.labels(), e.table())));
    // Composition of partial maps.
    for (Element x = 0; x < ts.size(); ++x) {
      for (Element y = 0; y < ts.size(); ++y) {
        CHECK(t.maps[ts.mul(x, y)] == compose(t.maps[x], t.maps[y]));
      }
    }
  }
}

TEST_CASE("Munn representation") {
  for (auto const& entry : corpus::all()) {
    CAPTURE(entry.name);
    auto const  rep = munn_representation(entry.s);
    auto const& s   = *entry.s;
    auto const& t   = *rep.munn.semigroup;
    for (Element a = 0; a < s.size(); ++a) {
      for (Element b = 0; b < s.size(); ++b) {
        CHECK(rep.delta(s.mul(a, b)) == t.mul(rep.delta(a), rep.delta(b)));
      }
      // delta_a sends e to a e a^-1 on d(a)-down.
      auto const& iso = rep.munn.isos[rep.delta(a)];
      CHECK(rep.idempotents[iso.from] == s.d(a));
      CHECK(rep.idempotents[iso.to] == s.r(a));
      for (auto const& [p, q] : iso.map) {
        CHECK(rep.idempotents[q] == s.mul(a, rep.idempotents[p], s.inverse(a)));
      }
    }
    auto const r = hom_checks(rep.delta);
    CHECK(r.is_idempotent_separating);
    CHECK(kernel(rep.delta) == mu(entry.s));
    // The image is wide.
    for (Element x = 0; x < t.size(); ++x) {
      if (t.is_idempotent(x)) {
        bool hit = false;
        for (Element a = 0; a < s.size(); ++a) {
          hit = hit || rep.delta(a) == x;
        }
        CHECK(hit);
      }
    }
    CHECK(is_fundamental_munn(entry.s) == is_fundamental(s));
    CHECK(is_fundamental_munn(entry.s) == r.is_injective);
    auto const q = quotient(mu(entry.s)).semigroup;
    CHECK(is_fundamental_munn(q));
  }
  CHECK(is_fundamental_munn(corpus::sym(3)));
  CHECK_FALSE(is_fundamental_munn(corpus::z3()));
  CHECK(is_fundamental_munn(corpus::b2()));
  auto const z3 = munn_representation(corpus::z3());
  CHECK(z3.munn.semigroup->size() == 1);
  auto const c3 = munn_representation(corpus::chain3());
  CHECK(hom_checks(c3.delta).is_injective);
  CHECK(are_isomorphic(*hom_checks(c3.delta).image_semigroup, *corpus::chain3()));
}
