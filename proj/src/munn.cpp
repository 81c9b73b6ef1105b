#include "invsg/munn.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "invsg/closure.hpp"
#include "invsg/congruence.hpp"
#include "invsg/errors.hpp"
#include "invsg/predicates.hpp"

namespace invsg {

std::vector<Element> MeetSemilattice::down(Element e) const {
  std::vector<Element> out;
  for (Element a = 0; a < size(); ++a) {
    if (leq(a, e)) {
      out.push_back(a);
    }
  }
  return out;
}

MeetSemilattice semilattice_from_band(std::vector<std::string>             labels,
                                      FiniteInverseSemigroup::Table const& table) {
  std::size_t const n = labels.size();
  require(n > 0 && table.size() == n, ErrorCode::InvalidTable, "table does not match labels");
  require(std::set<std::string>(labels.begin(), labels.end()).size() == n,
          ErrorCode::InvalidTable, "duplicate labels");
  for (auto const& row : table) {
    require(row.size() == n, ErrorCode::InvalidTable, "table is not square");
    for (auto x : row) {
      require(x < n, ErrorCode::InvalidTable, "table entry out of range");
    }
  }
  for (Element a = 0; a < n; ++a) {
    require(table[a][a] == a, ErrorCode::NotABand, "'" + labels[a] + "' is not idempotent");
    for (Element b = 0; b < n; ++b) {
      require(table[a][b] == table[b][a], ErrorCode::NotCommutative,
              "'" + labels[a] + "' and '" + labels[b] + "' do not commute");
      for (Element c = 0; c < n; ++c) {
        require(table[table[a][b]][c] == table[a][table[b][c]], ErrorCode::NotABand,
                "not associative at ('" + labels[a] + "', '" + labels[b] + "', '" + labels[c]
                    + "')");
      }
    }
  }
  MeetSemilattice e;
  e.labels_ = std::move(labels);
  e.meet_   = table;
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      auto const m = e.meet(a, b);
      ensure(e.leq(m, a) && e.leq(m, b), "meet is not a lower bound");
      for (Element c = 0; c < n; ++c) {
        ensure(!(e.leq(c, a) && e.leq(c, b)) || e.leq(c, m), "meet is not greatest");
      }
    }
  }
  return e;
}

MeetSemilattice idempotent_semilattice(FiniteInverseSemigroup const& s) {
  auto const&              idem = s.idempotents();
  std::map<Element, Element> pos;
  std::vector<std::string> labels;
  for (Element i = 0; i < idem.size(); ++i) {
    pos[idem[i]] = i;
    labels.push_back(s.label(idem[i]));
  }
  FiniteInverseSemigroup::Table table(idem.size(), std::vector<Element>(idem.size()));
  for (Element i = 0; i < idem.size(); ++i) {
    for (Element j = 0; j < idem.size(); ++j) {
      table[i][j] = pos.at(s.mul(idem[i], idem[j]));
    }
  }
  return semilattice_from_band(std::move(labels), table);
}

MunnSemigroup munn_semigroup(MeetSemilattice const& e, std::size_t bound) {
  std::size_t const n = e.size();
  if (n > bound) {
    fail(ErrorCode::BoundExceeded, "semilattice has " + std::to_string(n) + " > "
                                       + std::to_string(bound) + " elements");
  }
  std::vector<std::vector<Element>> down(n);
  for (Element a = 0; a < n; ++a) {
    down[a] = e.down(a);
  }
  auto rank = [&](Element a) { return down[a].size(); };

  std::vector<OrderIso> isos;
  for (Element from = 0; from < n; ++from) {
    // Sources by rank, so that each new point is compared against everything
    // below it already placed.
    auto xs = down[from];
    std::stable_sort(xs.begin(), xs.end(), [&](Element a, Element b) { return rank(a) < rank(b); });
    for (Element to = 0; to < n; ++to) {
      if (rank(from) != rank(to)) {
        continue;
      }
      std::vector<std::vector<std::pair<Element, Element>>> found;
      std::vector<Element>                                  ys;
      std::vector<bool>                                     used(n, false);
      auto search = [&](auto&& self, std::size_t i) -> void {
        if (i == xs.size()) {
          std::vector<std::pair<Element, Element>> map;
          for (std::size_t k = 0; k < xs.size(); ++k) {
            map.emplace_back(xs[k], ys[k]);
          }
          std::sort(map.begin(), map.end());
          found.push_back(std::move(map));
          return;
        }
        auto const x = xs[i];
        for (auto y : down[to]) {
          if (used[y] || rank(y) != rank(x)) {
            continue;
          }
          bool ok = true;
          for (std::size_t k = 0; k < i && ok; ++k) {
            ok = e.leq(xs[k], x) == e.leq(ys[k], y) && e.leq(x, xs[k]) == e.leq(y, ys[k]);
          }
          if (!ok) {
            continue;
          }
          used[y] = true;
          ys.push_back(y);
          self(self, i + 1);
          ys.pop_back();
          used[y] = false;
        }
      };
      search(search, 0);
      std::sort(found.begin(), found.end());
      for (auto& map : found) {
        isos.push_back(OrderIso{from, to, std::move(map)});
        require(isos.size() <= default_closure_bound, ErrorCode::BoundExceeded,
                "too many order isomorphisms");
      }
    }
  }

  std::vector<PartialBijection>      maps;
  std::map<PartialBijection, Element> index;
  std::vector<std::string>           labels;
  for (auto const& iso : isos) {
    std::vector<PartialBijection::Pair> graph;
    std::string                         label = e.label(iso.from) + "->" + e.label(iso.to) + " [";
    for (std::size_t k = 0; k < iso.map.size(); ++k) {
      auto [x, y] = iso.map[k];
      graph.emplace_back(static_cast<Point>(x + 1), static_cast<Point>(y + 1));
      label += (k ? "; " : "") + e.label(x) + ">" + e.label(y);
    }
    labels.push_back(label + "]");
    maps.emplace_back(n, graph);
    index.emplace(maps.back(), maps.size() - 1);
  }
  FiniteInverseSemigroup::Table mult(maps.size(), std::vector<Element>(maps.size()));
  for (Element i = 0; i < maps.size(); ++i) {
    for (Element j = 0; j < maps.size(); ++j) {
      auto it = index.find(compose(maps[i], maps[j]));
      ensure(it != index.end(), "order isomorphisms not closed under composition");
      mult[i][j] = it->second;
    }
  }
  auto const gens = greedy_generators(mult);
  auto t = share(FiniteInverseSemigroup::validate_cayley(std::move(labels), mult, {}, {}, gens));
  for (Element i = 0; i < t->size(); ++i) {
    bool const identity_map = isos[i].from == isos[i].to && maps[i].is_partial_identity();
    ensure(t->is_idempotent(i) == identity_map, "idempotents of T_E are not the identity maps");
  }
  return MunnSemigroup{e, std::move(isos), std::move(maps), std::move(t)};
}

MunnRepresentation munn_representation(SemigroupPtr const& s, std::size_t bound) {
  auto const&                idem = s->idempotents();
  std::map<Element, Element> pos;
  for (Element i = 0; i < idem.size(); ++i) {
    pos[idem[i]] = i;
  }
  auto munn = munn_semigroup(idempotent_semilattice(*s), bound);
  std::map<PartialBijection, Element> index;
  for (Element i = 0; i < munn.maps.size(); ++i) {
    index.emplace(munn.maps[i], i);
  }
  std::size_t const    n = idem.size();
  std::vector<Element> map(s->size());
  for (Element a = 0; a < s->size(); ++a) {
    std::vector<PartialBijection::Pair> graph;
    for (auto x : munn.semilattice.down(pos.at(s->d(a)))) {
      auto const image = s->mul(a, idem[x], s->inverse(a));
      graph.emplace_back(static_cast<Point>(x + 1), static_cast<Point>(pos.at(image) + 1));
    }
    auto it = index.find(PartialBijection(n, graph));
    ensure(it != index.end(), "delta_s is not an order isomorphism of principal ideals");
    map[a] = it->second;
  }
  auto delta = make_homomorphism(s, munn.semigroup, std::move(map));
  std::set<Element> idem_images;
  for (auto e : idem) {
    idem_images.insert(delta(e));
  }
  ensure(idem_images.size() == idem.size(), "Munn representation is not idempotent-separating");
  ensure(kernel(delta) == mu(s), "kernel of the Munn representation is not mu");
  return MunnRepresentation{std::move(munn), idem, std::move(delta)};
}

bool is_fundamental_munn(SemigroupPtr const& s) {
  auto const              rep = munn_representation(s);
  std::set<Element> const image(rep.delta.map.begin(), rep.delta.map.end());
  bool const              injective = image.size() == s->size();
  ensure(injective == is_fundamental(*s), "Munn test disagrees with centralizer test");
  return injective;
}

}  // namespace invsg
