#include <doctest.h>

#include <nlohmann/json.hpp>

#include "corpus.hpp"
#include "invsg/closure.hpp"
#include "invsg/errors.hpp"
#include "invsg/groupoid.hpp"
#include "invsg/io.hpp"

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

}  // namespace

TEST_CASE("isg-1 layout") {
  auto const text = write_isg(*corpus::sym(1));
  CHECK(text == R"({"format":"isg-1","labels":["0","id:1"],"mult":[[0,0],[0,1]],"one":1,"zero":0})"
                "\n");
  auto const z2 = write_isg(*corpus::z2());
  auto const j  = nlohmann::json::parse(z2);
  CHECK_FALSE(j.contains("zero"));
  CHECK(j["one"] == 0);
  auto const b2 = nlohmann::json::parse(write_isg(*corpus::b2()));
  CHECK_FALSE(b2.contains("one"));
  CHECK(b2.contains("zero"));
}

TEST_CASE("isg-1 round trips") {
  for (auto const& e : corpus::all()) {
    CAPTURE(e.name);
    auto const text = write_isg(*e.s);
    auto const back = read_isg(text);
    CHECK(back.labels() == e.s->labels());
    CHECK(back.table() == e.s->table());
    CHECK(back.zero() == e.s->zero());
    CHECK(back.one() == e.s->one());
    CHECK(write_isg(back) == text);
    CHECK(write_isg(read_semigroup(text)) == text);
  }
}

TEST_CASE("isg-gen-1") {
  GeneratorFile g{2, {PartialBijection::parse("1>2", 2)}};
  auto const    text = write_isg_gen(g);
  CHECK(text == R"({"degree":2,"format":"isg-gen-1","generators":["1>2"]})"
                "\n");
  auto const back = read_isg_gen(text);
  CHECK(back.degree == 2);
  CHECK(back.generators == g.generators);
  CHECK(write_isg_gen(back) == text);
  auto const s = read_semigroup(text);
  CHECK(s.size() == 5);
  CHECK(write_isg(s) == write_isg(*closure_from_generators(g.generators).semigroup));
  CHECK(code_of([] { read_isg_gen(R"({"format":"isg-gen-1","degree":2,"generators":["1>3"]})"); }) ==
        ErrorCode::PointOutOfRange);
}

TEST_CASE("grpd-1 round trips") {
  std::vector<FiniteGroupoid> gs{pair_groupoid(2), pair_groupoid(3), discrete_groupoid(2),
                                 corpus::equivalence_groupoid(),
                                 underlying_groupoid(*corpus::sym(2)),
                                 atomic_groupoid(*corpus::sym(3))};
  for (auto const& g : gs) {
    auto const text = write_grpd(g);
    auto const back = read_grpd(text);
    CHECK(back.names() == g.names());
    CHECK(back.comp() == g.comp());
    CHECK(back.identities() == g.identities());
    CHECK(write_grpd(back) == text);
    auto const j = nlohmann::json::parse(text);
    CHECK(j["format"] == "grpd-1");
    CHECK(j["arrows"].size() == g.size());
    CHECK(j["inv"].size() == g.size());
  }
  auto const p2 = nlohmann::json::parse(write_grpd(pair_groupoid(2)));
  CHECK(p2["arrows"][0]["name"] == "(1,1)");
  CHECK(p2["identities"] == nlohmann::json::array({0, 3}));
}

TEST_CASE("malformed input") {
  CHECK(code_of([] { read_isg("not json"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { read_isg(R"({"format":"isg-2","labels":[],"mult":[]})"); }) ==
        ErrorCode::ParseError);
  CHECK(code_of([] { read_isg(R"({"format":"isg-1","labels":["a"]})"); }) ==
        ErrorCode::ParseError);
  CHECK(code_of([] { read_isg(R"({"format":"isg-1","labels":["a"],"mult":[[-1]]})"); }) ==
        ErrorCode::ParseError);
  CHECK(code_of([] { read_isg(R"({"format":"isg-1","labels":["a","b"],"mult":[[0,0],[1,1]]})"); }) ==
        ErrorCode::IdempotentsDoNotCommute);
  CHECK(code_of([] { read_isg(R"({"format":"isg-1","labels":["a"],"mult":[[0]],"zero":3})"); }) ==
        ErrorCode::BadZero);
  CHECK(code_of([] { read_semigroup(R"({"format":"other"})"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { read_semigroup("[1,2]"); }) == ErrorCode::ParseError);
  auto bad = nlohmann::json::parse(write_grpd(pair_groupoid(2)));
  bad["identities"] = nlohmann::json::array({0});
  CHECK(code_of([&] { read_grpd(bad.dump()); }) == ErrorCode::InvalidGroupoid);
  bad = nlohmann::json::parse(write_grpd(pair_groupoid(2)));
  bad["comp"][0][0] = 1;
  CHECK(code_of([&] { read_grpd(bad.dump()); }) == ErrorCode::InvalidGroupoid);
}

TEST_CASE("congruence serialization") {
  auto const i2   = corpus::sym(2);
  auto const text = congruence_to_json(*i2, {{0, 1}, {2}, {3}, {4}, {5}, {6}});
  auto const j    = nlohmann::json::parse(text);
  REQUIRE(j.is_array());
  CHECK(j.size() == 6);
  CHECK(j[0] == nlohmann::json::array({i2->label(0), i2->label(1)}));
}
