#include "invsg/catalog.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "invsg/errors.hpp"

namespace invsg::catalog {

FiniteInverseSemigroup trivial_group() {
  return cyclic_group(1);
}

FiniteInverseSemigroup cyclic_group(std::size_t n) {
  require(n > 0, ErrorCode::InvalidTable, "Z_0 is not a group");
  std::vector<std::string>      labels;
  FiniteInverseSemigroup::Table mult(n, std::vector<Element>(n));
  for (std::size_t a = 0; a < n; ++a) {
    labels.push_back(std::to_string(a));
    for (std::size_t b = 0; b < n; ++b) {
      mult[a][b] = (a + b) % n;
    }
  }
  return FiniteInverseSemigroup::validate_cayley(std::move(labels), mult);
}

FiniteInverseSemigroup chain_semilattice(std::size_t k) {
  require(k > 0, ErrorCode::InvalidTable, "empty chain");
  std::vector<std::string>      labels;
  FiniteInverseSemigroup::Table mult(k, std::vector<Element>(k));
  for (std::size_t a = 0; a < k; ++a) {
    labels.push_back(std::to_string(a));
    for (std::size_t b = 0; b < k; ++b) {
      mult[a][b] = std::min(a, b);
    }
  }
  return FiniteInverseSemigroup::validate_cayley(std::move(labels), mult);
}

FiniteInverseSemigroup boolean_semilattice(std::size_t k) {
  require(k < 16, ErrorCode::BoundExceeded, "2^k semilattice with k >= 16");
  std::size_t const             n = std::size_t{1} << k;
  std::vector<std::string>      labels;
  FiniteInverseSemigroup::Table mult(n, std::vector<Element>(n));
  for (std::size_t a = 0; a < n; ++a) {
    std::string label = "{";
    for (std::size_t i = 0; i < k; ++i) {
      if (a & (std::size_t{1} << i)) {
        if (label.size() > 1) {
          label += ',';
        }
        label += std::to_string(i + 1);
      }
    }
    labels.push_back(label + "}");
    for (std::size_t b = 0; b < n; ++b) {
      mult[a][b] = a & b;
    }
  }
  return FiniteInverseSemigroup::validate_cayley(std::move(labels), mult);
}

FiniteInverseSemigroup adjoin_zero(FiniteInverseSemigroup const& s) {
  std::string zero_label = "0";
  while (s.find(zero_label)) {
    zero_label += "'";
  }
  std::size_t const             n = s.size() + 1;
  std::vector<std::string>      labels{zero_label};
  FiniteInverseSemigroup::Table mult(n, std::vector<Element>(n, 0));
  for (Element a = 0; a < s.size(); ++a) {
    labels.push_back(s.label(a));
    for (Element b = 0; b < s.size(); ++b) {
      mult[a + 1][b + 1] = s.mul(a, b) + 1;
    }
  }
  return FiniteInverseSemigroup::validate_cayley(std::move(labels), mult, Element{0});
}

}  // namespace invsg::catalog
