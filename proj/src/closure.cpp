#include "invsg/closure.hpp"

#include <algorithm>

#include "invsg/errors.hpp"

namespace invsg {

std::optional<Element> ConcreteSemigroup::index_of(PartialBijection const& f) const {
  auto it = std::find(elements.begin(), elements.end(), f);
  if (it == elements.end()) {
    return std::nullopt;
  }
  return static_cast<Element>(it - elements.begin());
}

namespace {

ConcreteSemigroup tabulate(std::vector<PartialBijection>               elements,
                           std::unordered_map<PartialBijection, Element> const& index,
                           std::vector<Element> const&                  generators) {
  std::size_t const             n = elements.size();
  FiniteInverseSemigroup::Table mult(n, std::vector<Element>(n));
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      auto it = index.find(compose(elements[a], elements[b]));
      require(it != index.end(), ErrorCode::InvalidTable,
              "set of partial bijections is not closed under composition");
      mult[a][b] = it->second;
    }
  }
  for (auto const& f : elements) {
    require(index.contains(invert(f)), ErrorCode::InvalidTable,
            "set of partial bijections is not closed under inversion");
  }
  std::vector<std::string> labels;
  labels.reserve(n);
  for (auto const& f : elements) {
    labels.push_back(f.to_string());
  }
  auto s = FiniteInverseSemigroup::validate_cayley(std::move(labels), mult, {}, {},
                                                   generators);
  return ConcreteSemigroup{share(std::move(s)), std::move(elements)};
}

}  // namespace

ConcreteSemigroup closure_from_generators(std::vector<PartialBijection> generators,
                                          std::size_t                   bound) {
  require(!generators.empty(), ErrorCode::InvalidTable, "no generators");
  for (auto const& g : generators) {
    if (g.degree() != generators.front().degree()) {
      fail(ErrorCode::DegreeMismatch, "generators have different degrees");
    }
  }
  std::vector<PartialBijection> seeds = generators;
  for (auto const& g : generators) {
    seeds.push_back(invert(g));
  }
  std::sort(seeds.begin(), seeds.end());
  seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());

  std::vector<PartialBijection>                 elements;
  std::unordered_map<PartialBijection, Element> index;
  auto add = [&](PartialBijection const& f) {
    if (index.emplace(f, elements.size()).second) {
      elements.push_back(f);
      if (elements.size() > bound) {
        fail(ErrorCode::BoundExceeded,
             "closure exceeds " + std::to_string(bound) + " elements");
      }
    }
  };
  for (auto const& g : seeds) {
    add(g);
  }
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (auto const& g : seeds) {
      add(compose(elements[i], g));
    }
  }
  std::vector<Element> generator_indices;
  for (auto const& g : seeds) {
    generator_indices.push_back(index.at(g));
  }
  return tabulate(std::move(elements), index, generator_indices);
}

ConcreteSemigroup symmetric_inverse_monoid(std::size_t n, std::size_t bound) {
  return concrete_semigroup(enumerate_symmetric_inverse_monoid(n, bound));
}

ConcreteSemigroup concrete_semigroup(std::vector<PartialBijection> elements) {
  require(!elements.empty(), ErrorCode::InvalidTable, "no elements");
  std::unordered_map<PartialBijection, Element> index;
  for (auto const& f : elements) {
    require(f.degree() == elements.front().degree(), ErrorCode::DegreeMismatch,
            "elements have different degrees");
    require(index.emplace(f, index.size()).second, ErrorCode::InvalidTable,
            "duplicate element " + f.to_string());
  }
  // Light's test needs generators; the whole set always qualifies but costs
  // the same as the cubic check, so use a greedy generating set instead.
  std::vector<Element> gens;
  std::vector<bool>    covered(elements.size(), false);
  std::vector<Element> members;
  for (Element a = 0; a < elements.size(); ++a) {
    if (covered[a]) {
      continue;
    }
    gens.push_back(a);
    covered[a] = true;
    members.push_back(a);
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (auto g : gens) {
        for (auto const& p : {compose(elements[members[i]], elements[g]),
                              compose(elements[g], elements[members[i]])}) {
          auto it = index.find(p);
          require(it != index.end(), ErrorCode::InvalidTable,
                  "set of partial bijections is not closed under composition");
          if (!covered[it->second]) {
            covered[it->second] = true;
            members.push_back(it->second);
          }
        }
      }
    }
  }
  return tabulate(std::move(elements), index, gens);
}

}  // namespace invsg
