#include "invsg/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>

#include "invsg/checks.hpp"
#include "invsg/closure.hpp"
#include "invsg/congruence.hpp"
#include "invsg/errors.hpp"
#include "invsg/groupoid.hpp"
#include "invsg/io.hpp"
#include "invsg/munn.hpp"
#include "invsg/order.hpp"
#include "invsg/report.hpp"

namespace invsg {

namespace {

struct Streams {
  std::istream& in;
  std::ostream& out;
};

std::string read_input(std::string const& path, Streams& io) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << io.in.rdbuf();
  } else {
    std::ifstream file(path);
    require(file.good(), ErrorCode::ParseError, "cannot open '" + path + "'");
    buffer << file.rdbuf();
  }
  return buffer.str();
}

void write_output(std::string const& path, std::string const& text, Streams& io) {
  if (path == "-") {
    io.out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  require(file.good(), ErrorCode::ParseError, "cannot write '" + path + "'");
  file << text;
}

SemigroupPtr read_semigroup_from(std::string const& path, Streams& io) {
  return share(read_semigroup(read_input(path, io)));
}

// The ideal named by a quotient "rees=" argument: "rankK" for the elements
// whose d(s) has height at most K in E(S), otherwise labels separated by ';'.
std::vector<Element> rees_ideal(FiniteInverseSemigroup const& s, std::string const& spec) {
  std::smatch m;
  if (std::regex_match(spec, m, std::regex("rank([0-9]+)"))) {
    auto const           k = std::stoul(m[1]);
    auto const           h = heights(s);
    std::vector<Element> ideal;
    for (Element a = 0; a < s.size(); ++a) {
      if (h[s.d(a)] <= k) {
        ideal.push_back(a);
      }
    }
    return ideal;
  }
  std::vector<Element> ideal;
  std::stringstream    parts(spec);
  for (std::string label; std::getline(parts, label, ';');) {
    ideal.push_back(s.at(label));
  }
  require(!ideal.empty(), ErrorCode::ParseError, "empty ideal");
  std::sort(ideal.begin(), ideal.end());
  ideal.erase(std::unique(ideal.begin(), ideal.end()), ideal.end());
  return ideal;
}

std::size_t parse_oracle_name(std::string const& name) {
  std::smatch m;
  require(std::regex_match(name, m, std::regex("I([0-9]+)")), ErrorCode::ParseError,
          "expected a name like I3, got '" + name + "'");
  return std::stoul(m[1]);
}

}  // namespace

int run(std::vector<std::string> const& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Streams io{in, out};
  CLI::App app{"Finite inverse semigroups: closures, congruences, groupoids and duality", "isg"};
  app.require_subcommand(1);

  std::string input  = "-";
  std::string output = "-";

  auto* closure = app.add_subcommand("closure", "inverse semigroup generated by partial bijections");
  std::size_t              degree = 0;
  std::vector<std::string> gens;
  std::size_t              closure_bound = default_closure_bound;
  closure->add_option("-d,--degree", degree, "number of points")->required();
  closure->add_option("-g,--gen", gens, "generator such as 1>2,2>1 or id:1")->required();
  closure->add_option("--bound", closure_bound, "maximum number of elements");
  closure->add_option("-o,--output", output);

  auto* analyze_cmd = app.add_subcommand("analyze", "print an analysis report");
  bool  json        = false;
  analyze_cmd->add_option("input", input);
  analyze_cmd->add_flag("--json", json);

  auto*       quotient_cmd = app.add_subcommand("quotient", "quotient by sigma, mu, xi or an ideal");
  std::string by;
  quotient_cmd->add_option("input", input);
  quotient_cmd->add_option("--by", by, "sigma | mu | xi | rees=<l1;l2;...> | rees=rankK")
      ->required();
  quotient_cmd->add_option("-o,--output", output);

  auto*       munn_cmd   = app.add_subcommand("munn", "Munn semigroup of E(S)");
  std::size_t munn_bound = default_munn_bound;
  munn_cmd->add_option("input", input);
  munn_cmd->add_option("--bound", munn_bound, "maximum size of E(S)");
  munn_cmd->add_option("-o,--output", output);

  auto*       groupoid_cmd = app.add_subcommand("groupoid", "underlying or atomic groupoid");
  bool        use_atoms    = false;
  std::string dot;
  groupoid_cmd->add_option("input", input);
  groupoid_cmd->add_flag("--atoms", use_atoms, "groupoid of atoms instead of all elements");
  groupoid_cmd->add_option("--dot", dot, "also write DOT here");
  groupoid_cmd->add_option("-o,--output", output);

  auto*       bisections_cmd = app.add_subcommand("bisections", "local bisections K(G) of a groupoid");
  std::size_t bisection_bound = default_bisection_bound;
  bisections_cmd->add_option("input", input);
  bisections_cmd->add_option("--bound", bisection_bound, "maximum number of elements");
  bisections_cmd->add_option("-o,--output", output);

  auto*       check_cmd = app.add_subcommand("check", "run invariant suites");
  std::string suite     = "all";
  check_cmd->add_option("input", input);
  check_cmd->add_option("--suite", suite)
      ->check(CLI::IsMember({"all", "orders", "congruences", "duality"}));

  auto*       oracle_cmd = app.add_subcommand("oracle", "enumerated symmetric inverse monoid");
  std::string oracle_name;
  std::size_t oracle_bound = default_enumeration_bound;
  oracle_cmd->add_option("name", oracle_name, "In")->required();
  oracle_cmd->add_option("--bound", oracle_bound, "largest n allowed");
  oracle_cmd->add_option("-o,--output", output);

  auto*       congruences_cmd = app.add_subcommand("congruences", "list every congruence");
  std::size_t lattice_bound   = default_oracle_bound;
  congruences_cmd->add_option("input", input);
  congruences_cmd->add_option("--bound", lattice_bound, "largest semigroup allowed");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (CLI::CallForHelp const&) {
    out << app.help();
    return exit_ok;
  } catch (CLI::ParseError const& e) {
    err << "isg: " << e.what() << "\n";
    return exit_malformed_input;
  }

  try {
    if (closure->parsed()) {
      std::vector<PartialBijection> generators;
      for (auto const& g : gens) {
        generators.push_back(PartialBijection::parse(g, degree));
      }
      auto c = closure_from_generators(std::move(generators), closure_bound);
      write_output(output, write_isg(*c.semigroup), io);
    } else if (analyze_cmd->parsed()) {
      auto const report = analyze(read_semigroup_from(input, io));
      out << (json ? to_json(report) : to_text(report));
    } else if (quotient_cmd->parsed()) {
      auto const s = read_semigroup_from(input, io);
      Quotient   q;
      if (by == "sigma") {
        q = quotient(sigma(s));
      } else if (by == "mu") {
        q = quotient(mu(s));
      } else if (by == "xi") {
        q = quotient(xi(s));
      } else if (by.rfind("rees=", 0) == 0) {
        q = rees_quotient(s, rees_ideal(*s, by.substr(5)));
      } else {
        fail(ErrorCode::ParseError, "--by must be sigma, mu, xi or rees=...");
      }
      write_output(output, write_isg(*q.semigroup), io);
    } else if (munn_cmd->parsed()) {
      auto const s = read_semigroup_from(input, io);
      auto const t = munn_semigroup(idempotent_semilattice(*s), munn_bound);
      write_output(output, write_isg(*t.semigroup), io);
    } else if (groupoid_cmd->parsed()) {
      auto const s = read_semigroup_from(input, io);
      auto const g = use_atoms ? atomic_groupoid(*s) : underlying_groupoid(*s);
      if (!dot.empty()) {
        write_output(dot, to_dot(g), io);
      }
      if (dot != "-" || output != "-") {
        write_output(output, write_grpd(g), io);
      }
    } else if (bisections_cmd->parsed()) {
      auto k = local_bisections(read_grpd(read_input(input, io)), bisection_bound);
      write_output(output, write_isg(*k.semigroup), io);
    } else if (check_cmd->parsed()) {
      auto const s       = read_semigroup_from(input, io);
      bool       failed  = false;
      for (auto const& r : run_suite(s, suite)) {
        out << r.name << ": ";
        switch (r.status) {
          case CheckStatus::Pass: out << "pass"; break;
          case CheckStatus::Fail: out << "FAIL"; failed = true; break;
          case CheckStatus::Skip: out << "skip"; break;
        }
        out << (r.detail.empty() ? "" : " (" + r.detail + ")") << "\n";
      }
      return failed ? exit_check_failed : exit_ok;
    } else if (oracle_cmd->parsed()) {
      auto const n = parse_oracle_name(oracle_name);
      auto const c = symmetric_inverse_monoid(n, oracle_bound);
      write_output(output, write_isg(*c.semigroup), io);
    } else if (congruences_cmd->parsed()) {
      auto const s       = read_semigroup_from(input, io);
      auto const lattice = all_congruences(s, lattice_bound);
      out << "congruences: " << lattice.size() << "\n";
      for (auto const& c : lattice) {
        out << congruence_to_json(*s, c.classes()) << "\n";
      }
    }
  } catch (Error const& e) {
    err << "isg: " << e.what() << "\n";
    return e.code() == ErrorCode::BoundExceeded ? exit_bound_exceeded : exit_malformed_input;
  } catch (InvariantViolation const& e) {
    err << "isg: internal invariant violated: " << e.what() << "\n";
    return exit_internal_error;
  }
  return exit_ok;
}

}  // namespace invsg
