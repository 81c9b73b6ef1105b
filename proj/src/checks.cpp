#include "invsg/checks.hpp"

#include <functional>
#include <set>

#include "invsg/boolean.hpp"
#include "invsg/congruence.hpp"
#include "invsg/errors.hpp"
#include "invsg/greens.hpp"
#include "invsg/groupoid.hpp"
#include "invsg/munn.hpp"
#include "invsg/order.hpp"
#include "invsg/predicates.hpp"
#include "invsg/wagner_preston.hpp"

namespace invsg {

namespace {

// A check returns an empty string on success, "skip: ..." when it does not
// apply, and a description of the first failure otherwise.
using Check = std::function<std::string(SemigroupPtr const&)>;

inline constexpr std::size_t check_bisection_bound = 512;

std::string label_pair(FiniteInverseSemigroup const& s, Element a, Element b) {
  return "('" + s.label(a) + "', '" + s.label(b) + "')";
}

std::string axioms(SemigroupPtr const& p) {
  auto const& s = *p;
  for (Element a = 0; a < s.size(); ++a) {
    if (s.mul(a, s.inverse(a), a) != a) {
      return "a a^-1 a != a at '" + s.label(a) + "'";
    }
    for (Element b = 0; b < s.size(); ++b) {
      if (s.inverse(s.mul(a, b)) != s.mul(s.inverse(b), s.inverse(a))) {
        return "(ab)^-1 != b^-1 a^-1 at " + label_pair(s, a, b);
      }
    }
  }
  return {};
}

std::string order_characterizations(SemigroupPtr const& p) {
  auto const& s = *p;
  for (Element a = 0; a < s.size(); ++a) {
    for (Element b = 0; b < s.size(); ++b) {
      bool const le = natural_leq(s, a, b);
      if (le != leq_by_right_idempotent(s, a, b) || le != leq_by_left_idempotent(s, a, b)
          || le != leq_by_range(s, a, b)) {
        return "characterizations of <= disagree at " + label_pair(s, a, b);
      }
    }
  }
  return {};
}

std::string partial_order(SemigroupPtr const& p) {
  auto const& s = *p;
  for (Element a = 0; a < s.size(); ++a) {
    if (!s.leq(a, a)) {
      return "not reflexive at '" + s.label(a) + "'";
    }
    for (Element b = 0; b < s.size(); ++b) {
      if (a != b && s.leq(a, b) && s.leq(b, a)) {
        return "not antisymmetric at " + label_pair(s, a, b);
      }
      for (Element c = 0; c < s.size(); ++c) {
        if (s.leq(a, b) && s.leq(b, c) && !s.leq(a, c)) {
          return "not transitive at " + label_pair(s, a, c);
        }
      }
    }
  }
  return {};
}

std::string downset_iso(SemigroupPtr const& p) {
  auto const& s = *p;
  for (Element a = 0; a < s.size(); ++a) {
    auto const        below = down_set(s, a);
    std::set<Element> image;
    for (auto x : below) {
      image.insert(s.d(x));
      for (auto y : below) {
        if (s.leq(x, y) != s.leq(s.d(x), s.d(y))) {
          return "x -> d(x) is not an order isomorphism below '" + s.label(a) + "'";
        }
      }
    }
    auto const target = down_set(s, s.d(a));
    if (image != std::set<Element>(target.begin(), target.end())) {
      return "x -> d(x) does not map onto d(a)-down for '" + s.label(a) + "'";
    }
  }
  return {};
}

std::string wagner_preston_check(SemigroupPtr const& p) {
  auto const&             s  = *p;
  auto const              wp = wagner_preston(p);
  std::set<Element> const image(wp.lambda.map.begin(), wp.lambda.map.end());
  if (image.size() != s.size()) {
    return "lambda is not injective";
  }
  for (Element a = 0; a < s.size(); ++a) {
    for (Element b = 0; b < s.size(); ++b) {
      auto const& la = wp.image.elements[wp.lambda(a)];
      auto const& lb = wp.image.elements[wp.lambda(b)];
      if (s.leq(a, b) != restriction_leq(la, lb)) {
        return "a <= b differs from lambda_a <= lambda_b at " + label_pair(s, a, b);
      }
    }
  }
  return {};
}

std::string property_cross_checks(SemigroupPtr const& p) {
  predicates(*p);
  return {};
}

std::string sigma_check(SemigroupPtr const& p) {
  auto const rho = sigma(p);
  if (!has_group_quotient(rho) || !is_group(*quotient(rho).semigroup)) {
    return "S/sigma is not a group";
  }
  if (p->has_zero() && !rho.is_universal()) {
    return "sigma is not universal on a semigroup with zero";
  }
  if (p->size() <= default_oracle_bound) {
    for (auto const& c : all_congruences(p)) {
      if (has_group_quotient(c) && !rho.is_contained_in(c)) {
        return "sigma is not below a congruence with group quotient";
      }
    }
  }
  return {};
}

std::string mu_check(SemigroupPtr const& p) {
  auto const rho = mu(p);
  if (!is_idempotent_separating(rho)) {
    return "mu is not idempotent-separating";
  }
  if (!rho.partition().refines(greens(*p).H)) {
    return "mu is not contained in H";
  }
  if (!is_fundamental(*quotient(rho).semigroup)) {
    return "S/mu is not fundamental";
  }
  if (p->size() <= default_oracle_bound) {
    auto top = Congruence::equality(p);
    for (auto const& c : all_congruences(p)) {
      if (is_idempotent_separating(c)) {
        top = join(top, c);
      }
    }
    if (!(top == rho)) {
      return "mu is not the largest idempotent-separating congruence";
    }
  }
  munn_representation(p);
  return {};
}

std::string xi_check(SemigroupPtr const& p) {
  if (!p->has_zero()) {
    return "skip: no zero";
  }
  auto const rho = xi(p);
  if (!is_zero_restricted(rho)) {
    return "xi is not 0-restricted";
  }
  if (!mu(p).is_contained_in(rho)) {
    return "mu is not contained in xi";
  }
  auto const& idem = p->idempotents();
  auto const  e    = share(induced_subsemigroup(*p, idem));
  auto const  xe   = xi(e);
  for (Element i = 0; i < idem.size(); ++i) {
    for (Element j = 0; j < idem.size(); ++j) {
      if (rho.related(idem[i], idem[j]) != xe.related(i, j)) {
        return "xi restricted to E(S) differs from xi of E(S)";
      }
    }
  }
  if (p->size() <= default_oracle_bound) {
    auto top = Congruence::equality(p);
    for (auto const& c : all_congruences(p)) {
      if (is_zero_restricted(c)) {
        top = join(top, c);
      }
    }
    if (!(top == rho)) {
      return "xi is not the largest 0-restricted congruence";
    }
  }
  return {};
}

std::string e_unitary_check(SemigroupPtr const& p) {
  bool const unitary     = is_e_unitary(*p);
  bool const transitive  = compatibility_is_transitive(*p);
  auto const rho         = sigma(p);
  auto const compat      = compatibility_matrix(*p);
  bool       sim_is_sigma = true;
  for (Element a = 0; a < p->size(); ++a) {
    for (Element b = 0; b < p->size(); ++b) {
      sim_is_sigma = sim_is_sigma && compat[a][b] == rho.related(a, b);
    }
  }
  bool const pure = is_idempotent_pure(rho);
  if (unitary != transitive || unitary != sim_is_sigma || unitary != pure) {
    return "E-unitary characterizations disagree";
  }
  return {};
}

std::string congruence_free_check(SemigroupPtr const& p) {
  if (!p->has_zero() || p->size() < 2) {
    return "skip: needs a zero and two elements";
  }
  is_congruence_free(p);
  return {};
}

std::string munn_check(SemigroupPtr const& p) {
  is_fundamental_munn(p);
  return {};
}

std::string atoms_check(SemigroupPtr const& p) {
  if (!p->has_zero()) {
    return "skip: no zero";
  }
  auto const& s  = *p;
  auto const  at = atoms(s);
  atomic_groupoid(s);
  for (auto a : at) {
    for (auto b : at) {
      if (a != b && compatible(s, a, b) && !orthogonal(s, a, b)) {
        return "distinct compatible atoms that are not orthogonal: " + label_pair(s, a, b);
      }
    }
  }
  return {};
}

std::string boolean_check(SemigroupPtr const& p) {
  if (!p->has_zero() || !p->is_monoid()) {
    return "skip: needs a monoid with zero";
  }
  if (!is_boolean(p)) {
    return "skip: not Boolean";
  }
  auto const iso = atom_iso(p);
  auto const a   = atomic_groupoid(*p);
  if (!are_isomorphic(atomic_groupoid(*iso.bisections.semigroup), a)) {
    return "A(K(A(S))) is not isomorphic to A(S)";
  }
  bool const fundamental = is_fundamental_boolean(p);
  if (fundamental) {
    auto const d = decompose_fundamental(p);
    if (!are_isomorphic(*d.product, *p)) {
      return "decomposition product is not isomorphic to S";
    }
  }
  return {};
}

std::string bisections_check(SemigroupPtr const& p) {
  if (!p->is_monoid()) {
    return "skip: not a monoid";
  }
  DownsetEmbedding emb;
  try {
    emb = downset_embedding(p, check_bisection_bound);
  } catch (Error const& e) {
    if (e.code() == ErrorCode::BoundExceeded) {
      return "skip: K(G(S)) too large";
    }
    throw;
  }
  auto const gamma = extend_to_bisections(emb.beta, emb);
  for (Element i = 0; i < gamma.map.size(); ++i) {
    if (gamma(i) != i) {
      return "extension of beta is not the identity";
    }
  }
  return {};
}

struct NamedCheck {
  char const* suite;
  char const* name;
  Check       run;
};

std::vector<NamedCheck> const& registry() {
  static std::vector<NamedCheck> const checks{
      {"orders", "axioms", axioms},
      {"orders", "order-characterizations", order_characterizations},
      {"orders", "partial-order", partial_order},
      {"orders", "downset-iso", downset_iso},
      {"orders", "wagner-preston", wagner_preston_check},
      {"orders", "property-cross-checks", property_cross_checks},
      {"congruences", "sigma", sigma_check},
      {"congruences", "mu", mu_check},
      {"congruences", "xi", xi_check},
      {"congruences", "e-unitary", e_unitary_check},
      {"congruences", "congruence-free", congruence_free_check},
      {"duality", "munn", munn_check},
      {"duality", "atoms", atoms_check},
      {"duality", "boolean", boolean_check},
      {"duality", "bisections", bisections_check},
  };
  return checks;
}

}  // namespace

std::vector<CheckResult> run_suite(SemigroupPtr const& s, std::string_view suite) {
  require(suite == "all" || suite == "orders" || suite == "congruences" || suite == "duality",
          ErrorCode::ParseError, "unknown suite \"" + std::string(suite) + "\"");
  std::vector<CheckResult> out;
  for (auto const& c : registry()) {
    if (suite != "all" && suite != c.suite) {
      continue;
    }
    CheckResult r{std::string(c.suite) + "/" + c.name, CheckStatus::Pass, {}};
    try {
      auto msg = c.run(s);
      if (msg.rfind("skip: ", 0) == 0) {
        r.status = CheckStatus::Skip;
        r.detail = msg.substr(6);
      } else if (!msg.empty()) {
        r.status = CheckStatus::Fail;
        r.detail = std::move(msg);
      }
    } catch (std::exception const& e) {
      r.status = CheckStatus::Fail;
      r.detail = e.what();
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace invsg
