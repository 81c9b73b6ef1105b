#include "invsg/wagner_preston.hpp"

#include <algorithm>

#include "invsg/errors.hpp"

namespace invsg {

PartialBijection left_translation(FiniteInverseSemigroup const& s, Element a) {
  std::vector<PartialBijection::Pair> graph;
  auto const                          da = s.d(a);
  for (Element x = 0; x < s.size(); ++x) {
    // x lies in d(a)S exactly when d(a) x = x.
    if (s.mul(da, x) == x) {
      graph.emplace_back(static_cast<Point>(x + 1), static_cast<Point>(s.mul(a, x) + 1));
    }
  }
  return PartialBijection(s.size(), graph);
}

WagnerPreston wagner_preston(SemigroupPtr const& s) {
  std::vector<PartialBijection> lambdas;
  lambdas.reserve(s->size());
  for (Element a = 0; a < s->size(); ++a) {
    lambdas.push_back(left_translation(*s, a));
  }
  auto image = closure_from_generators(lambdas, std::max(default_closure_bound, s->size()));
  std::vector<Element> map;
  map.reserve(s->size());
  for (auto const& f : lambdas) {
    map.push_back(*image.index_of(f));
  }
  auto lambda = make_homomorphism(s, image.semigroup, std::move(map));
  return WagnerPreston{std::move(image), std::move(lambda)};
}

}  // namespace invsg
