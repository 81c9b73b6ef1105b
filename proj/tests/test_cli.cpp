#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "invsg/cli.hpp"
#include "invsg/io.hpp"

using namespace invsg;

namespace {

struct Result {
  int         code;
  std::string out;
  std::string err;
};

Result isg(std::vector<std::string> const& args, std::string const& input = "") {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  int const          code = run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string value_of(std::string const& report, std::string const& key) {
  std::istringstream lines(report);
  for (std::string line; std::getline(lines, line);) {
    if (line.rfind(key + ": ", 0) == 0) {
      return line.substr(key.size() + 2);
    }
  }
  return "<missing>";
}

std::string shell(std::string const& command) {
  std::string out;
  FILE*       pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buffer[4096];
  for (std::size_t n; (n = fread(buffer, 1, sizeof buffer, pipe)) > 0;) {
    out.append(buffer, n);
  }
  pclose(pipe);
  return out;
}

std::filesystem::path scratch(std::string const& name) {
  auto dir = std::filesystem::temp_directory_path() / "isg_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

std::string slurp(std::filesystem::path const& p) {
  std::ifstream      f(p, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("oracle then analyze") {
  auto const i2 = isg({"oracle", "I2"});
  REQUIRE(i2.code == exit_ok);
  auto const report = isg({"analyze"}, i2.out);
  CHECK(report.code == exit_ok);
  CHECK(value_of(report.out, "order") == "7");
  CHECK(value_of(report.out, "idempotents") == "4");
  CHECK(value_of(report.out, "fundamental") == "true");
  CHECK(value_of(report.out, "boolean") == "true");
  CHECK(value_of(report.out, "decomposition") == "I2");
  CHECK(value_of(report.out, "congruence-free") == "false");
}

TEST_CASE("closure then analyze") {
  auto const b2 = isg({"closure", "-d", "2", "-g", "1>2"});
  REQUIRE(b2.code == exit_ok);
  auto const report = isg({"analyze", "-"}, b2.out);
  CHECK(value_of(report.out, "order") == "5");
  CHECK(value_of(report.out, "congruence-free") == "true");
  CHECK(value_of(report.out, "monoid") == "false");
  CHECK(value_of(report.out, "boolean") == "n/a");
}

TEST_CASE("analyze json") {
  auto const i1     = isg({"oracle", "I1"}).out;
  auto const report = isg({"analyze", "--json"}, i1);
  REQUIRE(report.code == exit_ok);
  auto const j = nlohmann::json::parse(report.out);
  CHECK(j["order"] == 2);
  CHECK(j["idempotents"] == 2);
}

TEST_CASE("quotients") {
  auto const i2 = isg({"oracle", "I2"}).out;
  auto const q  = isg({"quotient", "--by", "rees=rank1"}, i2);
  REQUIRE(q.code == exit_ok);
  CHECK(read_isg(q.out).size() == 3);
  auto const labels = isg({"quotient", "--by", "rees=0;id:1;id:2;1>2;2>1"}, i2);
  REQUIRE(labels.code == exit_ok);
  CHECK(labels.out == q.out);
  CHECK(read_isg(isg({"quotient", "--by", "sigma"}, i2).out).size() == 1);
  CHECK(read_isg(isg({"quotient", "--by", "mu"}, i2).out).size() == 7);
  CHECK(read_isg(isg({"quotient", "--by", "xi"}, i2).out).size() == 7);
  CHECK(isg({"quotient", "--by", "rees=1>2"}, i2).code == exit_malformed_input);
  CHECK(isg({"quotient", "--by", "bogus"}, i2).code == exit_malformed_input);
  auto const z2 = R"({"format":"isg-1","labels":["e","g"],"mult":[[0,1],[1,0]]})";
  CHECK(isg({"quotient", "--by", "xi"}, z2).code == exit_malformed_input);
}

TEST_CASE("munn, groupoid and bisections") {
  auto const i2 = isg({"oracle", "I2"}).out;
  auto const t  = isg({"munn"}, i2);
  REQUIRE(t.code == exit_ok);
  CHECK(read_isg(t.out).size() == 7);
  auto const g = isg({"groupoid", "--atoms"}, i2);
  REQUIRE(g.code == exit_ok);
  CHECK(read_grpd(g.out).size() == 4);
  auto const k = isg({"bisections"}, g.out);
  REQUIRE(k.code == exit_ok);
  CHECK(read_isg(k.out).size() == 7);
  auto const dot = isg({"groupoid", "--atoms", "--dot", "-"}, i2);
  REQUIRE(dot.code == exit_ok);
  CHECK(dot.out.rfind("digraph groupoid {", 0) == 0);
  CHECK(isg({"bisections", "--bound", "3"}, g.out).code == exit_bound_exceeded);
}

TEST_CASE("files") {
  auto const path = scratch("i2.isg");
  REQUIRE(isg({"oracle", "I2", "-o", path.string()}).code == exit_ok);
  auto const first = slurp(path);
  CHECK(first == isg({"oracle", "I2"}).out);
  auto const dot = scratch("a.dot");
  REQUIRE(isg({"groupoid", path.string(), "--atoms", "--dot", dot.string()}).code == exit_ok);
  CHECK(slurp(dot).rfind("digraph groupoid {", 0) == 0);
  CHECK(isg({"analyze", scratch("missing.isg").string()}).code == exit_malformed_input);
}

TEST_CASE("check and congruences") {
  auto const i2 = isg({"oracle", "I2"}).out;
  auto const c  = isg({"check"}, i2);
  CHECK(c.code == exit_ok);
  CHECK(c.out.find("FAIL") == std::string::npos);
  CHECK(isg({"check", "--suite", "orders"}, i2).code == exit_ok);
  CHECK(isg({"check", "--suite", "nonsense"}, i2).code == exit_malformed_input);
  auto const l = isg({"congruences"}, i2);
  REQUIRE(l.code == exit_ok);
  CHECK(l.out.rfind("congruences: ", 0) == 0);
  auto const i3 = isg({"oracle", "I3"}).out;
  CHECK(isg({"congruences"}, i3).code == exit_bound_exceeded);
}

TEST_CASE("exit codes") {
  CHECK(isg({"--help"}).code == exit_ok);
  CHECK(isg({}).code == exit_malformed_input);
  CHECK(isg({"frobnicate"}).code == exit_malformed_input);
  CHECK(isg({"analyze"}, "{").code == exit_malformed_input);
  CHECK(isg({"analyze"}, R"({"format":"isg-1","labels":["a","b"],"mult":[[1,0],[0,0]]})").code ==
        exit_malformed_input);
  CHECK(isg({"closure", "-d", "2", "-g", "1>5"}).code == exit_malformed_input);
  CHECK(isg({"closure", "-d", "3", "-g", "1>2,2>3,3>1", "-g", "1>2,2>1,3>3", "-g", "id:1,2",
             "--bound", "10"})
            .code == exit_bound_exceeded);
  CHECK(isg({"oracle", "X2"}).code == exit_malformed_input);
  CHECK(isg({"oracle", "I4", "--bound", "3"}).code == exit_bound_exceeded);
  CHECK_FALSE(isg({"oracle", "X2"}).err.empty());
}

TEST_CASE("round trips are byte identical") {
  auto const i3    = isg({"oracle", "I3"}).out;
  auto const again = isg({"analyze"}, i3);
  CHECK(again.out == isg({"analyze"}, i3).out);
  CHECK(write_isg(read_isg(i3)) == i3);
  auto const g = isg({"groupoid"}, i3).out;
  CHECK(write_grpd(read_grpd(g)) == g);
  auto const gen = R"({"degree":2,"format":"isg-gen-1","generators":["1>2"]})";
  CHECK(isg({"analyze"}, gen).out == isg({"analyze"}, isg({"closure", "-d", "2", "-g", "1>2"}).out).out);
}

TEST_CASE("binary pipelines are deterministic") {
  std::string const bin = ISG_BINARY;
  auto const        cmd = bin + " oracle I2 | " + bin + " analyze";
  auto const        a   = shell(cmd);
  CHECK(value_of(a, "order") == "7");
  CHECK(a == shell(cmd));
  auto const b2 = shell(bin + " closure -d 2 -g '1>2' | " + bin + " analyze");
  CHECK(value_of(b2, "congruence-free") == "true");
  auto const status = std::system((bin + " analyze /nonexistent 2>/dev/null").c_str());
  CHECK(WEXITSTATUS(status) == exit_malformed_input);
}

TEST_CASE("shipped corpus passes the checks") {
  std::size_t seen = 0;
  for (auto const& entry : std::filesystem::directory_iterator(CORPUS_DIR)) {
    if (entry.path().extension() != ".isg") {
      continue;
    }
    CAPTURE(entry.path().string());
    auto const r = isg({"check", entry.path().string()});
    CHECK(r.code == exit_ok);
    ++seen;
  }
  CHECK(seen > 0);
}
