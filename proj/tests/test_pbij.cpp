#include <doctest.h>

#include <set>

#include "invsg/errors.hpp"
#include "invsg/pbij.hpp"

using namespace invsg;

namespace {

PartialBijection pb(std::string_view text, std::size_t n) { return PartialBijection::parse(text, n); }

// All maps {1..n} -> {0..n} with 0 meaning undefined, keeping the injective ones.
std::set<PartialBijection> brute_force(std::size_t n) {
  std::set<PartialBijection> out;
  std::size_t                total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    total *= n + 1;
  }
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<PartialBijection::Pair> graph;
    std::set<Point>                     used;
    bool                                injective = true;
    std::size_t                         rest      = code;
    for (Point x = 1; x <= n; ++x, rest /= n + 1) {
      auto const y = static_cast<Point>(rest % (n + 1));
      if (y != 0) {
        injective = injective && used.insert(y).second;
        graph.emplace_back(x, y);
      }
    }
    if (injective) {
      out.insert(PartialBijection(n, graph));
    }
  }
  return out;
}

std::size_t binomial(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
  }
  return r;
}

std::size_t factorial(std::size_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace

TEST_CASE("parse and print") {
  CHECK(pb("1>2,3>1", 3).to_string() == "1>2,3>1");
  CHECK(pb("3>1,1>2", 3).to_string() == "1>2,3>1");
  CHECK(pb("id:1,2", 2).to_string() == "id:1,2");
  CHECK(pb("1>1", 2).to_string() == "id:1");
  CHECK(pb("0", 2).to_string() == "0");
  CHECK(pb("0", 2).is_empty());
  CHECK(pb("1>2", 2)(1) == Point{2});
  CHECK_FALSE(pb("1>2", 2)(2).has_value());
  CHECK_THROWS_AS(pb("1>3", 2), Error);
  CHECK_THROWS_AS(pb("1>2,1>1", 2), Error);
  CHECK_THROWS_AS(pb("1>2,2>2", 2), Error);
  CHECK_THROWS_AS(pb("1-2", 2), Error);
  CHECK_THROWS_AS(PartialBijection(0), Error);
}

TEST_CASE("error codes") {
  auto code = [](auto&& f) {
    try {
      f();
    } catch (Error const& e) {
      return e.code();
    }
    return ErrorCode::ParseError;
  };
  CHECK(code([] { (void)pb("1>3", 2); }) == ErrorCode::PointOutOfRange);
  CHECK(code([] { (void)pb("1>2,1>1", 2); }) == ErrorCode::NotAPartialBijection);
  CHECK(code([] { (void)compose(pb("0", 2), pb("0", 3)); }) == ErrorCode::DegreeMismatch);
  CHECK(code([] { (void)restriction_leq(pb("0", 2), pb("0", 3)); }) == ErrorCode::DegreeMismatch);
  CHECK(code([] { (void)enumerate_symmetric_inverse_monoid(6); }) == ErrorCode::BoundExceeded);
  CHECK(code([] { (void)partial_identity(2, {3}); }) == ErrorCode::PointOutOfRange);
}

TEST_CASE("compose applies the right factor first") {
  CHECK(compose(pb("2>3", 3), pb("1>2", 3)) == pb("1>3", 3));
  CHECK(compose(pb("1>2", 2), pb("1>2", 2)).is_empty());
  for (auto const& f : enumerate_symmetric_inverse_monoid(2)) {
    CHECK(compose(pb("id:1,2", 2), f) == f);
    CHECK(compose(f, pb("id:1,2", 2)) == f);
  }
}

TEST_CASE("inverse") {
  CHECK(invert(pb("1>2", 2)) == pb("2>1", 2));
  CHECK(invert(pb("id:1,3", 3)) == pb("id:1,3", 3));
  for (auto const& f : enumerate_symmetric_inverse_monoid(3)) {
    CHECK(invert(invert(f)) == f);
    CHECK(compose(f, invert(f)) == partial_identity(3, f.range()));
    CHECK(compose(invert(f), f) == partial_identity(3, f.domain()));
  }
}

TEST_CASE("partial identities") {
  CHECK(partial_identity(2, {1}) == pb("1>1", 2));
  CHECK(partial_identity(2, {}) == pb("0", 2));
  CHECK(partial_identity(3, {1, 2}).is_partial_identity());
  CHECK(compose(partial_identity(3, {1, 2}), partial_identity(3, {2, 3})) ==
        partial_identity(3, {2}));
  // Degree is part of the element.
  CHECK_FALSE(partial_identity(2, {}) == partial_identity(3, {}));
}

TEST_CASE("restriction order and unions") {
  CHECK(restriction_leq(pb("id:1", 2), pb("id:1,2", 2)));
  CHECK(restriction_leq(pb("1>2", 2), pb("1>2,2>1", 2)));
  CHECK_FALSE(restriction_leq(pb("1>2", 2), pb("id:1,2", 2)));
  CHECK(compatible_union(pb("1>1", 2), pb("2>2", 2)) == pb("id:1,2", 2));
  CHECK_FALSE(compatible_union(pb("1>1", 2), pb("1>2", 2)).has_value());
  CHECK_FALSE(compatible_union(pb("1>2", 3), pb("3>2", 3)).has_value());
}

TEST_CASE("union exists exactly for compatible pairs") {
  auto const all = enumerate_symmetric_inverse_monoid(3);
  for (auto const& f : all) {
    for (auto const& g : all) {
      bool const compatible = compose(invert(f), g).is_partial_identity() ||
                              compose(invert(f), g).is_empty();
      bool const compatible2 = compose(f, invert(g)).is_partial_identity() ||
                               compose(f, invert(g)).is_empty();
      CHECK(compatible_union(f, g).has_value() == (compatible && compatible2));
    }
  }
}

TEST_CASE("enumeration matches brute force and the counting formula") {
  for (std::size_t n = 1; n <= 4; ++n) {
    auto const  all = enumerate_symmetric_inverse_monoid(n);
    std::size_t expected = 0;
    for (std::size_t k = 0; k <= n; ++k) {
      expected += binomial(n, k) * binomial(n, k) * factorial(k);
    }
    CHECK(all.size() == expected);
    CHECK(std::set<PartialBijection>(all.begin(), all.end()) == brute_force(n));
    CHECK(std::is_sorted(all.begin(), all.end()));
  }
  CHECK(enumerate_symmetric_inverse_monoid(1).size() == 2);
  CHECK(enumerate_symmetric_inverse_monoid(2).size() == 7);
  CHECK(enumerate_symmetric_inverse_monoid(3).size() == 34);
}

TEST_CASE("I3 is an inverse monoid") {
  auto const all = enumerate_symmetric_inverse_monoid(3);
  for (auto const& f : all) {
    CHECK(compose(compose(f, invert(f)), f) == f);
    // The inverse is the unique g with fgf = f and gfg = g.
    std::size_t solutions = 0;
    for (auto const& g : all) {
      if (compose(compose(f, g), f) == f && compose(compose(g, f), g) == g) {
        ++solutions;
        CHECK(g == invert(f));
      }
    }
    CHECK(solutions == 1);
    bool const idempotent = f.is_partial_identity() || f.is_empty();
    CHECK((compose(f, f) == f) == idempotent);
    for (auto const& g : all) {
      for (auto const& h : all) {
        CHECK(compose(compose(f, g), h) == compose(f, compose(g, h)));
      }
    }
  }
}
