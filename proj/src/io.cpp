#include "invsg/io.hpp"

#include <json.hpp>

#include "invsg/closure.hpp"
#include "invsg/errors.hpp"

namespace invsg {

using nlohmann::json;

namespace {

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (json::exception const& e) {
    fail(ErrorCode::ParseError, e.what());
  }
}

void expect_format(json const& j, std::string const& format) {
  require(j.is_object(), ErrorCode::ParseError, "top level is not an object");
  require(j.contains("format") && j["format"] == format, ErrorCode::ParseError,
          "expected format \"" + format + "\"");
}

std::size_t index_field(json const& v, std::string const& what) {
  require(v.is_number_unsigned(), ErrorCode::ParseError, what + " is not a non-negative integer");
  return v.get<std::size_t>();
}

std::string string_field(json const& v, std::string const& what) {
  require(v.is_string(), ErrorCode::ParseError, what + " is not a string");
  return v.get<std::string>();
}

json const& array_field(json const& j, char const* key) {
  require(j.contains(key) && j[key].is_array(), ErrorCode::ParseError,
          std::string("missing array \"") + key + "\"");
  return j[key];
}

std::string dump(json const& j) { return j.dump() + "\n"; }

}  // namespace

std::string write_isg(FiniteInverseSemigroup const& s) {
  json j;
  j["format"] = "isg-1";
  j["labels"] = s.labels();
  j["mult"]   = s.table();
  if (auto z = s.zero()) {
    j["zero"] = *z;
  }
  if (auto o = s.one()) {
    j["one"] = *o;
  }
  return dump(j);
}

FiniteInverseSemigroup read_isg(std::string_view text) {
  auto const j = parse(text);
  expect_format(j, "isg-1");
  std::vector<std::string> labels;
  for (auto const& v : array_field(j, "labels")) {
    labels.push_back(string_field(v, "label"));
  }
  FiniteInverseSemigroup::Table mult;
  for (auto const& row : array_field(j, "mult")) {
    require(row.is_array(), ErrorCode::ParseError, "table row is not an array");
    auto& out = mult.emplace_back();
    for (auto const& v : row) {
      out.push_back(index_field(v, "table entry"));
    }
  }
  std::optional<Element> zero, one;
  if (j.contains("zero")) {
    zero = index_field(j["zero"], "zero");
  }
  if (j.contains("one")) {
    one = index_field(j["one"], "one");
  }
  return FiniteInverseSemigroup::validate_cayley(std::move(labels), mult, zero, one);
}

std::string write_isg_gen(GeneratorFile const& g) {
  json j;
  j["format"] = "isg-gen-1";
  j["degree"] = g.degree;
  j["generators"] = json::array();
  for (auto const& f : g.generators) {
    j["generators"].push_back(f.to_string());
  }
  return dump(j);
}

GeneratorFile read_isg_gen(std::string_view text) {
  auto const j = parse(text);
  expect_format(j, "isg-gen-1");
  require(j.contains("degree"), ErrorCode::ParseError, "missing \"degree\"");
  GeneratorFile g;
  g.degree = index_field(j["degree"], "degree");
  for (auto const& v : array_field(j, "generators")) {
    g.generators.push_back(PartialBijection::parse(string_field(v, "generator"), g.degree));
  }
  return g;
}

FiniteInverseSemigroup read_semigroup(std::string_view text) {
  auto const j = parse(text);
  require(j.is_object() && j.contains("format") && j["format"].is_string(), ErrorCode::ParseError,
          "missing \"format\"");
  auto const format = j["format"].get<std::string>();
  if (format == "isg-1") {
    return read_isg(text);
  }
  if (format == "isg-gen-1") {
    auto g = read_isg_gen(text);
    return *closure_from_generators(std::move(g.generators)).semigroup;
  }
  fail(ErrorCode::ParseError, "unknown format \"" + format + "\"");
}

std::string write_grpd(FiniteGroupoid const& g) {
  json j;
  j["format"]     = "grpd-1";
  j["identities"] = g.identities();
  j["arrows"]     = json::array();
  j["comp"]       = json::array();
  j["inv"]        = json::array();
  for (Arrow x = 0; x < g.size(); ++x) {
    j["arrows"].push_back({{"name", g.name(x)}, {"dom", g.dom(x)}, {"cod", g.cod(x)}});
    json row = json::array();
    for (Arrow y = 0; y < g.size(); ++y) {
      if (auto z = g.compose(x, y)) {
        row.push_back(*z);
      } else {
        row.push_back(nullptr);
      }
    }
    j["comp"].push_back(std::move(row));
    j["inv"].push_back(g.inverse(x));
  }
  return dump(j);
}

FiniteGroupoid read_grpd(std::string_view text) {
  auto const j = parse(text);
  expect_format(j, "grpd-1");
  std::vector<std::string> names;
  std::vector<Arrow>       dom, cod, inv;
  for (auto const& a : array_field(j, "arrows")) {
    require(a.is_object() && a.contains("name") && a.contains("dom") && a.contains("cod"),
            ErrorCode::ParseError, "arrow needs name, dom and cod");
    names.push_back(string_field(a["name"], "arrow name"));
    dom.push_back(index_field(a["dom"], "dom"));
    cod.push_back(index_field(a["cod"], "cod"));
  }
  FiniteGroupoid::CompTable comp;
  for (auto const& row : array_field(j, "comp")) {
    require(row.is_array(), ErrorCode::ParseError, "composition row is not an array");
    auto& out = comp.emplace_back();
    for (auto const& v : row) {
      out.push_back(v.is_null() ? no_arrow : index_field(v, "composite"));
    }
  }
  for (auto const& v : array_field(j, "inv")) {
    inv.push_back(index_field(v, "inverse"));
  }
  std::vector<Arrow> identities;
  for (auto const& v : array_field(j, "identities")) {
    identities.push_back(index_field(v, "identity"));
  }
  FiniteGroupoid g(std::move(names), std::move(dom), std::move(cod), std::move(comp),
                   std::move(inv));
  require(identities == g.identities(), ErrorCode::InvalidGroupoid,
          "\"identities\" does not list exactly the identity arrows");
  return g;
}

std::string congruence_to_json(FiniteInverseSemigroup const&                s,
                               std::vector<std::vector<std::size_t>> const& classes) {
  json out = json::array();
  for (auto const& c : classes) {
    json labels = json::array();
    for (auto a : c) {
      labels.push_back(s.label(a));
    }
    out.push_back(std::move(labels));
  }
  return out.dump();
}

}  // namespace invsg
