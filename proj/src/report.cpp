#include "invsg/report.hpp"

#include <json.hpp>
#include <variant>
#include <vector>

#include "invsg/boolean.hpp"
#include "invsg/congruence.hpp"
#include "invsg/greens.hpp"
#include "invsg/groupoid.hpp"

namespace invsg {

AnalysisReport analyze(SemigroupPtr const& s) {
  AnalysisReport r;
  r.order       = s->size();
  r.idempotents = s->idempotents().size();
  r.has_zero    = s->has_zero();
  r.is_monoid   = s->is_monoid();
  r.properties  = predicates(*s);
  auto const g  = greens(*s);
  r.l_classes   = g.L.class_count();
  r.r_classes   = g.R.class_count();
  r.h_classes   = g.H.class_count();
  r.d_classes   = g.D.class_count();
  r.j_classes   = g.J.class_count();
  r.sigma_classes = sigma(s).class_count();
  r.mu_classes    = mu(s).class_count();
  if (s->has_zero()) {
    r.xi_classes = xi(s).class_count();
    r.atoms      = atoms(*s).size();
    if (s->size() >= 2) {
      r.congruence_free = is_congruence_free(s);
    }
  }
  if (s->has_zero() && s->is_monoid()) {
    r.is_boolean = is_boolean(s).has_value();
    if (*r.is_boolean && r.properties.is_fundamental) {
      r.decomposition = to_string(decompose_fundamental(s));
    }
  }
  return r;
}

namespace {

using Value = std::variant<std::monostate, bool, std::size_t, std::string>;

template <typename T>
Value opt(std::optional<T> const& v) {
  return v ? Value(*v) : Value();
}

std::vector<std::pair<std::string, Value>> fields(AnalysisReport const& r) {
  auto const& p = r.properties;
  return {
      {"order", r.order},
      {"idempotents", r.idempotents},
      {"zero", r.has_zero},
      {"monoid", r.is_monoid},
      {"group", p.is_group},
      {"semilattice", p.is_meet_semilattice},
      {"clifford", p.is_clifford},
      {"e-unitary", p.is_e_unitary},
      {"e-star-unitary", opt(p.is_e_star_unitary)},
      {"factorizable", p.is_factorizable},
      {"f-inverse", p.is_f_inverse},
      {"fundamental", p.is_fundamental},
      {"bisimple", p.is_bisimple},
      {"0-simple", opt(p.is_0_simple)},
      {"0-bisimple", opt(p.is_0_bisimple)},
      {"0-disjunctive", opt(p.is_0_disjunctive)},
      {"infinitesimal", opt(p.has_infinitesimal)},
      {"boolean", opt(r.is_boolean)},
      {"congruence-free", opt(r.congruence_free)},
      {"L-classes", r.l_classes},
      {"R-classes", r.r_classes},
      {"H-classes", r.h_classes},
      {"D-classes", r.d_classes},
      {"J-classes", r.j_classes},
      {"sigma-classes", r.sigma_classes},
      {"mu-classes", r.mu_classes},
      {"xi-classes", opt(r.xi_classes)},
      {"atoms", opt(r.atoms)},
      {"decomposition", opt(r.decomposition)},
  };
}

}  // namespace

std::string to_text(AnalysisReport const& r) {
  std::string out;
  for (auto const& [key, value] : fields(r)) {
    out += key + ": ";
    std::visit(
        [&](auto const& v) {
          using V = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<V, std::monostate>) {
            out += "n/a";
          } else if constexpr (std::is_same_v<V, bool>) {
            out += v ? "true" : "false";
          } else if constexpr (std::is_same_v<V, std::size_t>) {
            out += std::to_string(v);
          } else {
            out += v;
          }
        },
        value);
    out += "\n";
  }
  return out;
}

std::string to_json(AnalysisReport const& r) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (auto const& [key, value] : fields(r)) {
    std::visit(
        [&](auto const& v) {
          if constexpr (std::is_same_v<std::decay_t<decltype(v)>, std::monostate>) {
            j[key] = nullptr;
          } else {
            j[key] = v;
          }
        },
        value);
  }
  return j.dump(2) + "\n";
}

}  // namespace invsg
