#include "invsg/boolean.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

#include "invsg/closure.hpp"
#include "invsg/errors.hpp"
#include "invsg/greens.hpp"
#include "invsg/groupoid.hpp"
#include "invsg/munn.hpp"
#include "invsg/order.hpp"
#include "invsg/predicates.hpp"

namespace invsg {

std::vector<Element> join_table(FiniteInverseSemigroup const& s) {
  std::size_t const                  n     = s.size();
  std::size_t const                  words = (n + 63) / 64;
  std::vector<std::vector<uint64_t>> up(n, std::vector<uint64_t>(words, 0));
  std::vector<std::size_t>           up_size(n, 0);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (s.leq(a, b)) {
        up[a][b / 64] |= uint64_t{1} << (b % 64);
        ++up_size[a];
      }
    }
  }
  // The least upper bound u is the common upper bound whose own up-set is the
  // whole set of common upper bounds.
  std::vector<Element>  out(n * n, no_element);
  std::vector<uint64_t> common(words);
  for (Element a = 0; a < n; ++a) {
    for (Element b = a; b < n; ++b) {
      std::size_t count = 0;
      for (std::size_t w = 0; w < words; ++w) {
        common[w] = up[a][w] & up[b][w];
        count += static_cast<std::size_t>(__builtin_popcountll(common[w]));
      }
      for (std::size_t w = 0; w < words && count > 0; ++w) {
        for (auto bits = common[w]; bits != 0; bits &= bits - 1) {
          auto const u = w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits));
          if (up_size[u] == count) {
            out[a * n + b] = out[b * n + a] = u;
          }
        }
      }
    }
  }
  return out;
}

namespace {

bool distributive_with(FiniteInverseSemigroup const& s, std::vector<Element> const& joins) {
  std::size_t const n = s.size();
  for (Element a = 0; a < n; ++a) {
    for (Element b = a + 1; b < n; ++b) {
      if (!compatible(s, a, b)) {
        continue;
      }
      auto const j = joins[a * n + b];
      if (j == no_element) {
        return false;
      }
      for (Element c = 0; c < n; ++c) {
        if (joins[s.mul(c, a) * n + s.mul(c, b)] != s.mul(c, j)
            || joins[s.mul(a, c) * n + s.mul(b, c)] != s.mul(j, c)) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

bool is_distributive(FiniteInverseSemigroup const& s) {
  s.one_or_throw();
  s.zero_or_throw();
  return distributive_with(s, join_table(s));
}

std::optional<BooleanCertificate> is_boolean(SemigroupPtr const& s) {
  auto const one  = s->one_or_throw();
  auto const zero = s->zero_or_throw();
  auto       joins = join_table(*s);
  if (!distributive_with(*s, joins)) {
    return std::nullopt;
  }
  std::size_t const    n = s->size();
  std::vector<Element> complement(n, no_element);
  for (auto e : s->idempotents()) {
    std::size_t found = 0;
    for (auto f : s->idempotents()) {
      if (s->mul(e, f) == zero && joins[e * n + f] == one) {
        complement[e] = f;
        ++found;
      }
    }
    if (found == 0) {
      return std::nullopt;
    }
    ensure(found == 1, "idempotent with two complements in a distributive lattice");
  }
  return BooleanCertificate{s, std::move(complement), std::move(joins)};
}

BooleanCertificate boolean_certificate(SemigroupPtr const& s) {
  auto cert = is_boolean(s);
  if (!cert) {
    fail(ErrorCode::NotBoolean, "not a Boolean inverse monoid");
  }
  return std::move(*cert);
}

Element relative_complement(BooleanCertificate const& cert, Element x, Element y) {
  auto const& s = *cert.base;
  if (!s.leq(y, x)) {
    fail(ErrorCode::NotBelow, "'" + s.label(y) + "' is not below '" + s.label(x) + "'");
  }
  auto const r = s.mul(x, cert.comp(s.d(y)));
  ensure(orthogonal(s, y, r), "relative complement is not orthogonal to y");
  ensure(cert.join(y, r) == x, "y and the relative complement do not join to x");
  ensure(s.d(r) == s.mul(s.d(x), cert.comp(s.d(y))), "domain of relative complement");
  ensure(s.r(r) == s.mul(s.r(x), cert.comp(s.r(y))), "range of relative complement");
  return r;
}

FiniteInverseSemigroup::Table frink_verify(FiniteInverseSemigroup::Table const& band,
                                           std::vector<Element> const&          complement,
                                           Element                              zero) {
  std::size_t const n = band.size();
  require(n > 0 && complement.size() == n && zero < n, ErrorCode::InvalidTable,
          "band, complement and zero do not match");
  for (auto const& row : band) {
    require(row.size() == n, ErrorCode::InvalidTable, "table is not square");
    for (auto x : row) {
      require(x < n, ErrorCode::InvalidTable, "table entry out of range");
    }
  }
  auto pair = [](Element a, Element b) {
    return "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
  };
  for (Element a = 0; a < n; ++a) {
    require(band[a][a] == a, ErrorCode::NotABand, std::to_string(a) + " is not idempotent");
    for (Element b = 0; b < n; ++b) {
      require(band[a][b] == band[b][a], ErrorCode::NotCommutative, pair(a, b));
      for (Element c = 0; c < n; ++c) {
        require(band[band[a][b]][c] == band[a][band[b][c]], ErrorCode::NotABand,
                "not associative at " + pair(a, b) + "." + std::to_string(c));
      }
    }
  }
  for (Element a = 0; a < n; ++a) {
    require(complement[a] < n && complement[complement[a]] == a, ErrorCode::FrinkViolation,
            "complement is not an involution at " + std::to_string(a));
    require(band[a][zero] == zero, ErrorCode::FrinkViolation, "zero is not absorbing");
  }
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if ((band[a][b] == a) != (band[a][complement[b]] == zero)) {
        fail(ErrorCode::FrinkViolation, pair(a, b));
      }
    }
  }
  FiniteInverseSemigroup::Table join(n, std::vector<Element>(n));
  auto leq = [&](Element a, Element b) { return band[a][b] == a; };
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      auto const j = complement[band[complement[a]][complement[b]]];
      require(leq(a, j) && leq(b, j), ErrorCode::FrinkViolation,
              "a + b is not an upper bound at " + pair(a, b));
      for (Element c = 0; c < n; ++c) {
        require(!(leq(a, c) && leq(b, c)) || leq(j, c), ErrorCode::FrinkViolation,
                "a + b is not least at " + pair(a, b));
      }
      join[a][b] = j;
    }
  }
  return join;
}

Element orthogonal_join(FiniteInverseSemigroup const& s, std::vector<Element> const& xs) {
  s.zero_or_throw();
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      if (!orthogonal(s, xs[i], xs[j])) {
        fail(ErrorCode::NotOrthogonal,
             "'" + s.label(xs[i]) + "' and '" + s.label(xs[j]) + "'");
      }
    }
  }
  auto j = join(s, xs);
  if (!j) {
    fail(ErrorCode::NoJoin, "orthogonal set has no join");
  }
  return *j;
}

namespace {

inline constexpr std::size_t ideal_enumeration_bound = 1U << 16;

}  // namespace

std::vector<std::vector<Element>> additive_ideals(SemigroupPtr const& s) {
  auto const  cert   = boolean_certificate(s);
  auto const  zero   = *s->zero();
  auto const  jrel   = greens(*s).J;
  auto const  ideals = principal_ideals(*s);
  auto const  cls    = jrel.classes();
  std::size_t const m = cls.size();

  // J-classes by increasing principal ideal, so everything below a class
  // comes before it.
  std::vector<std::size_t> ideal_size(m), order(m);
  for (std::size_t c = 0; c < m; ++c) {
    auto const& row = ideals[cls[c].front()];
    ideal_size[c]   = static_cast<std::size_t>(std::count(row.begin(), row.end(), true));
    order[c]        = c;
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return ideal_size[a] < ideal_size[b]; });
  auto below = [&](std::size_t lower, std::size_t upper) {
    return lower != upper && ideals[cls[upper].front()][cls[lower].front()];
  };

  std::vector<std::vector<Element>> out;
  std::vector<bool>                 chosen(m, false);
  auto search = [&](auto&& self, std::size_t i) -> void {
    if (i == m) {
      std::vector<Element> ideal;
      for (std::size_t c = 0; c < m; ++c) {
        if (chosen[c]) {
          ideal.insert(ideal.end(), cls[c].begin(), cls[c].end());
        }
      }
      std::sort(ideal.begin(), ideal.end());
      if (ideal.empty() || !std::binary_search(ideal.begin(), ideal.end(), zero)) {
        return;
      }
      for (auto a : ideal) {
        for (auto b : ideal) {
          auto j = cert.join(a, b);
          if (j && !std::binary_search(ideal.begin(), ideal.end(), *j)) {
            return;
          }
        }
      }
      require(out.size() < ideal_enumeration_bound, ErrorCode::BoundExceeded,
              "too many ideals");
      out.push_back(std::move(ideal));
      return;
    }
    auto const c = order[i];
    self(self, i + 1);
    bool closed = true;
    for (std::size_t l = 0; l < m; ++l) {
      closed = closed && (!below(l, c) || chosen[l]);
    }
    if (closed) {
      chosen[c] = true;
      self(self, i + 1);
      chosen[c] = false;
    }
  };
  search(search, 0);
  std::sort(out.begin(), out.end());
  for (auto const& ideal : out) {
    ensure(is_ideal(*s, ideal), "down-set of J-classes is not an ideal");
  }
  return out;
}

bool is_0_simplifying(SemigroupPtr const& s) {
  auto const zero = s->zero_or_throw();
  for (auto const& ideal : additive_ideals(s)) {
    if (ideal.size() != s->size() && ideal != std::vector<Element>{zero}) {
      return false;
    }
  }
  return true;
}

FiniteInverseSemigroup direct_product(FiniteInverseSemigroup const& s,
                                      FiniteInverseSemigroup const& t) {
  return direct_product({share(s), share(t)});
}

FiniteInverseSemigroup direct_product(std::vector<SemigroupPtr> const& factors) {
  std::size_t total = 1;
  for (auto const& f : factors) {
    total *= f->size();
    require(total <= default_closure_bound, ErrorCode::BoundExceeded, "product too large");
  }
  // Element i has coordinates digits[i], last factor fastest.
  std::vector<std::vector<Element>> digits(total);
  std::vector<std::string>          labels(total);
  for (std::size_t i = 0; i < total; ++i) {
    std::size_t rest = i;
    digits[i].resize(factors.size());
    for (std::size_t k = factors.size(); k-- > 0;) {
      digits[i][k] = rest % factors[k]->size();
      rest /= factors[k]->size();
    }
    std::string label = "(";
    for (std::size_t k = 0; k < factors.size(); ++k) {
      label += (k ? "," : "") + factors[k]->label(digits[i][k]);
    }
    labels[i] = label + ")";
  }
  FiniteInverseSemigroup::Table mult(total, std::vector<Element>(total));
  for (std::size_t i = 0; i < total; ++i) {
    for (std::size_t j = 0; j < total; ++j) {
      std::size_t index = 0;
      for (std::size_t k = 0; k < factors.size(); ++k) {
        index = index * factors[k]->size() + factors[k]->mul(digits[i][k], digits[j][k]);
      }
      mult[i][j] = index;
    }
  }
  auto const gens = greedy_generators(mult);
  return FiniteInverseSemigroup::validate_cayley(std::move(labels), mult, {}, {}, gens);
}

Decomposition decompose_fundamental(SemigroupPtr const& s) {
  boolean_certificate(s);
  if (!is_fundamental(*s)) {
    fail(ErrorCode::NotFundamental, "centralizer of the idempotents is larger than E(S)");
  }
  auto const at    = atoms(*s);
  auto const g     = atomic_groupoid(*s);
  auto const comps = components(g).classes();

  // Identities of each component, in arrow order; components by decreasing
  // number of identities.
  std::vector<std::vector<Arrow>> ids;
  for (auto const& c : comps) {
    std::vector<Arrow> e;
    for (auto x : c) {
      if (g.is_identity(x)) {
        e.push_back(x);
      }
    }
    ids.push_back(std::move(e));
  }
  std::vector<std::size_t> order(comps.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    order[i] = i;
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return ids[a].size() > ids[b].size(); });

  std::vector<std::size_t>       factors;
  std::vector<ConcreteSemigroup> monoids;
  std::vector<SemigroupPtr>      ptrs;
  std::vector<std::size_t>       factor_of_arrow(g.size());
  std::vector<Point>             point_of_identity(g.size(), 0);
  for (std::size_t f = 0; f < order.size(); ++f) {
    auto const c = order[f];
    factors.push_back(ids[c].size());
    monoids.push_back(symmetric_inverse_monoid(ids[c].size(), ids[c].size()));
    ptrs.push_back(monoids.back().semigroup);
    for (auto x : comps[c]) {
      factor_of_arrow[x] = f;
    }
    for (std::size_t p = 0; p < ids[c].size(); ++p) {
      point_of_identity[ids[c][p]] = static_cast<Point>(p + 1);
    }
  }
  auto product = share(direct_product(ptrs));

  std::vector<Element> map(s->size());
  for (Element a = 0; a < s->size(); ++a) {
    std::vector<std::vector<PartialBijection::Pair>> graphs(factors.size());
    for (Arrow x = 0; x < at.size(); ++x) {
      if (s->leq(at[x], a)) {
        graphs[factor_of_arrow[x]].emplace_back(point_of_identity[g.dom(x)],
                                                point_of_identity[g.cod(x)]);
      }
    }
    std::size_t index = 0;
    for (std::size_t f = 0; f < factors.size(); ++f) {
      auto const pos = monoids[f].index_of(PartialBijection(factors[f], graphs[f]));
      ensure(pos.has_value(), "atom graph is not a partial bijection");
      index = index * monoids[f].semigroup->size() + *pos;
    }
    map[a] = index;
  }
  auto iso = make_homomorphism(s, product, std::move(map));
  std::set<Element> const image(iso.map.begin(), iso.map.end());
  ensure(image.size() == s->size() && product->size() == s->size(),
         "decomposition map is not a bijection");
  return Decomposition{std::move(factors), std::move(product), std::move(iso)};
}

std::string to_string(Decomposition const& d) {
  if (d.factors.empty()) {
    return "I0";
  }
  std::string out;
  for (std::size_t i = 0; i < d.factors.size(); ++i) {
    out += (i ? " x I" : "I") + std::to_string(d.factors[i]);
  }
  return out;
}

bool is_fundamental_boolean(SemigroupPtr const& s) {
  boolean_certificate(s);
  bool const principal = is_principal(atomic_groupoid(*s));
  ensure(principal == is_fundamental(*s), "atomic groupoid test disagrees with centralizer test");
  ensure(principal == is_fundamental_munn(s), "atomic groupoid test disagrees with Munn test");
  return principal;
}

}  // namespace invsg
