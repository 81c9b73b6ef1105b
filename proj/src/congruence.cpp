#include "invsg/congruence.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "invsg/errors.hpp"
#include "invsg/greens.hpp"
#include "invsg/predicates.hpp"

namespace invsg {

Congruence::Congruence(SemigroupPtr base, Partition classes)
    : base_(std::move(base)), classes_(std::move(classes)) {
  auto const& s = *base_;
  require(classes_.size() == s.size(), ErrorCode::NotACongruence,
          "partition size differs from semigroup size");
  std::vector<Element> rep(classes_.class_count(), no_element);
  for (Element a = 0; a < s.size(); ++a) {
    if (rep[classes_.class_of(a)] == no_element) {
      rep[classes_.class_of(a)] = a;
    }
  }
  for (Element a = 0; a < s.size(); ++a) {
    auto const r = rep[classes_.class_of(a)];
    for (Element u = 0; u < s.size(); ++u) {
      if (!classes_.same(s.mul(u, a), s.mul(u, r)) || !classes_.same(s.mul(a, u), s.mul(r, u))) {
        fail(ErrorCode::NotACongruence, "(" + s.label(a) + ", " + s.label(r)
                                            + ") not preserved by '" + s.label(u) + "'");
      }
    }
  }
}

Congruence Congruence::equality(SemigroupPtr base) {
  auto n = base->size();
  return Congruence(std::move(base), Partition::discrete(n));
}

Congruence Congruence::universal(SemigroupPtr base) {
  auto n = base->size();
  return Congruence(std::move(base), Partition::universal(n));
}

Congruence congruence_closure(SemigroupPtr const& s, std::vector<ElementPair> const& pairs) {
  UnionFind                uf(s->size());
  std::vector<ElementPair> queue(pairs.begin(), pairs.end());
  while (!queue.empty()) {
    auto [a, b] = queue.back();
    queue.pop_back();
    if (!uf.unite(a, b)) {
      continue;
    }
    for (Element u = 0; u < s->size(); ++u) {
      queue.emplace_back(s->mul(u, a), s->mul(u, b));
      queue.emplace_back(s->mul(a, u), s->mul(b, u));
    }
  }
  return Congruence(s, Partition(uf));
}

Congruence join(Congruence const& a, Congruence const& b) {
  return Congruence(a.base(), join(a.partition(), b.partition()));
}

std::vector<Congruence> all_congruences(SemigroupPtr const& s, std::size_t bound) {
  if (s->size() > bound) {
    fail(ErrorCode::BoundExceeded, "congruence lattice of a semigroup with "
                                       + std::to_string(s->size()) + " > "
                                       + std::to_string(bound) + " elements");
  }
  std::set<Partition> found{Partition::discrete(s->size())};
  std::vector<Partition> principal;
  for (Element a = 0; a < s->size(); ++a) {
    for (Element b = a + 1; b < s->size(); ++b) {
      auto p = congruence_closure(s, {{a, b}}).partition();
      if (found.insert(p).second) {
        principal.push_back(p);
      }
    }
  }
  // Close under binary joins; joining with principal congruences suffices
  // because every congruence is a join of principal ones.
  std::vector<Partition> frontier(found.begin(), found.end());
  while (!frontier.empty()) {
    std::vector<Partition> next;
    for (auto const& c : frontier) {
      for (auto const& p : principal) {
        auto j = join(c, p);
        if (found.insert(j).second) {
          next.push_back(j);
        }
      }
    }
    frontier = std::move(next);
  }
  std::vector<Congruence> out;
  out.reserve(found.size());
  for (auto const& p : found) {
    out.emplace_back(s, p);
  }
  return out;
}

Quotient quotient(Congruence const& rho) {
  auto const& s       = *rho.base();
  auto const  classes = rho.classes();
  std::size_t const               k = classes.size();
  std::vector<std::string>        labels;
  FiniteInverseSemigroup::Table   mult(k, std::vector<Element>(k));
  auto const&                     ids = rho.partition().class_ids();
  for (std::size_t i = 0; i < k; ++i) {
    auto const rep = classes[i].front();
    labels.push_back(classes[i].size() == 1 ? s.label(rep) : "[" + s.label(rep) + "]");
    for (std::size_t j = 0; j < k; ++j) {
      mult[i][j] = ids[s.mul(rep, classes[j].front())];
    }
  }
  auto q = share(FiniteInverseSemigroup::validate_cayley(std::move(labels), mult));
  std::vector<Element> map(ids.begin(), ids.end());
  auto nat = make_homomorphism(rho.base(), q, std::move(map));
  // Every idempotent of the quotient is the image of an idempotent.
  for (auto f : q->idempotents()) {
    bool hit = std::any_of(s.idempotents().begin(), s.idempotents().end(),
                           [&](Element e) { return nat(e) == f; });
    ensure(hit, "quotient idempotent with no idempotent preimage");
  }
  return Quotient{std::move(q), std::move(nat)};
}

Congruence rees_congruence(SemigroupPtr const& s, std::vector<Element> const& ideal) {
  if (!is_ideal(*s, ideal)) {
    fail(ErrorCode::NotAnIdeal, "subset is not a two-sided ideal");
  }
  std::vector<std::size_t> ids(s->size());
  for (Element a = 0; a < s->size(); ++a) {
    ids[a] = a + 1;
  }
  for (auto a : ideal) {
    ids[a] = 0;
  }
  return Congruence(s, Partition(ids));
}

Quotient rees_quotient(SemigroupPtr const& s, std::vector<Element> const& ideal) {
  auto const rho = rees_congruence(s, ideal);
  auto       q   = quotient(rho);
  if (ideal.size() == 1) {
    return q;
  }
  // Relabel the collapsed ideal as "0".
  auto const               zero_class = rho.partition().class_of(ideal.front());
  std::vector<std::string> labels     = q.semigroup->labels();
  std::string              zero_label = "0";
  while (std::find(labels.begin(), labels.end(), zero_label) != labels.end()) {
    zero_label += "'";
  }
  labels[zero_class] = zero_label;
  auto relabelled    = share(FiniteInverseSemigroup::validate_cayley(
      std::move(labels), q.semigroup->table(), q.semigroup->zero(), q.semigroup->one()));
  return Quotient{relabelled, Homomorphism{s, relabelled, q.natural_map.map}};
}

Congruence kernel(Homomorphism const& theta) {
  return Congruence(theta.source, Partition(theta.map));
}

Congruence sigma(SemigroupPtr const& s) {
  return Congruence(s, minimum_group_partition(*s));
}

Congruence mu(SemigroupPtr const& s) {
  std::map<std::vector<Element>, std::size_t> signatures;
  std::vector<std::size_t>                    ids(s->size());
  for (Element a = 0; a < s->size(); ++a) {
    std::vector<Element> sig;
    for (auto e : s->idempotents()) {
      sig.push_back(s->mul(a, e, s->inverse(a)));
    }
    ids[a] = signatures.emplace(sig, signatures.size()).first->second;
  }
  return Congruence(s, Partition(ids));
}

Congruence xi(SemigroupPtr const& s) {
  auto const                                z = s->zero_or_throw();
  std::size_t const                         n = s->size();
  std::map<std::vector<bool>, std::size_t>  signatures;
  std::vector<std::size_t>                  ids(n);
  for (Element t = 0; t < n; ++t) {
    std::vector<bool> sig(n * n);
    for (Element a = 0; a < n; ++a) {
      auto const at = s->mul(a, t);
      for (Element b = 0; b < n; ++b) {
        sig[a * n + b] = s->mul(at, b) == z;
      }
    }
    ids[t] = signatures.emplace(std::move(sig), signatures.size()).first->second;
  }
  return Congruence(s, Partition(ids));
}

bool is_idempotent_separating(Congruence const& rho) {
  auto const& e = rho.base()->idempotents();
  for (std::size_t i = 0; i < e.size(); ++i) {
    for (std::size_t j = i + 1; j < e.size(); ++j) {
      if (rho.related(e[i], e[j])) {
        return false;
      }
    }
  }
  return true;
}

bool is_idempotent_pure(Congruence const& rho) {
  auto const& s = *rho.base();
  for (Element a = 0; a < s.size(); ++a) {
    if (s.is_idempotent(a)) {
      continue;
    }
    for (auto e : s.idempotents()) {
      if (rho.related(a, e)) {
        return false;
      }
    }
  }
  return true;
}

bool is_zero_restricted(Congruence const& rho) {
  auto const z = rho.base()->zero_or_throw();
  for (Element a = 0; a < rho.base()->size(); ++a) {
    if (a != z && rho.related(a, z)) {
      return false;
    }
  }
  return true;
}

bool has_group_quotient(Congruence const& rho) {
  auto const& e = rho.base()->idempotents();
  return std::all_of(e.begin(), e.end(), [&](Element f) { return rho.related(f, e.front()); });
}

SigmaFactorization factor_through_sigma(Homomorphism const& theta) {
  if (!is_group(*theta.target)) {
    fail(ErrorCode::TargetNotAGroup, "target has more than one idempotent");
  }
  if (!is_multiplicative(theta)) {
    fail(ErrorCode::NotAHomomorphism, "map is not multiplicative");
  }
  auto const           rho = sigma(theta.source);
  auto                 q   = quotient(rho);
  std::vector<Element> factor(q.semigroup->size(), no_element);
  for (Element a = 0; a < theta.source->size(); ++a) {
    auto& slot = factor[q.natural_map(a)];
    if (slot == no_element) {
      slot = theta(a);
    }
    ensure(slot == theta(a), "homomorphism to a group is not constant on sigma-classes");
  }
  auto star = make_homomorphism(q.semigroup, theta.target, std::move(factor));
  return SigmaFactorization{std::move(q), std::move(star)};
}

bool is_congruence_free(SemigroupPtr const& s) {
  s->zero_or_throw();
  if (s->size() < 2) {
    return false;
  }
  bool const by_theorem = is_fundamental(*s) && is_0_simple(*s) && is_0_disjunctive(*s);
  if (s->size() <= default_oracle_bound) {
    ensure(by_theorem == (all_congruences(s).size() == 2),
           "congruence-free theorem disagrees with the congruence lattice");
  }
  return by_theorem;
}

}  // namespace invsg
