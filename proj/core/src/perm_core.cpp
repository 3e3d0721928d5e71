#include "fitkit/perm_core.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <random>
#include <unordered_map>

#include "fitkit/caps.hpp"
#include "fitkit/errors.hpp"
#include "fitkit/numtheory.hpp"

namespace fitkit {

namespace {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30U)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27U)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31U);
}

void require_cap(const char* name, std::uint64_t limit, std::uint64_t actual) {
  if (actual > limit) throw CapExceeded(name, limit, actual);
}

bool normalizes(const Permutation& g, const FiniteGroup& H) {
  return std::all_of(H.generators().begin(), H.generators().end(),
                     [&](const Permutation& h) { return H.contains(h.conjugate(g)); });
}

// Lexicographically least element of the right coset H*g with respect to
// H's base images.
Permutation canonical_coset_rep(const StabChain& H, Permutation x) {
  for (const auto& L : H.levels()) {
    std::size_t best = 0;
    Point best_image = x[L.orbit[0]];
    for (std::size_t k = 1; k < L.orbit.size(); ++k) {
      Point im = x[L.orbit[k]];
      if (im < best_image) {
        best_image = im;
        best = k;
      }
    }
    if (best != 0) x = L.transversal[best] * x;
  }
  return x;
}

struct CosetTable {
  std::vector<Permutation> reps;
  std::vector<std::vector<Point>> action;  // action[gen][coset] -> coset
};

CosetTable enumerate_cosets(const FiniteGroup& G, const FiniteGroup& H) {
  require_cap("elements", caps().elements, G.order() / std::max<Order>(H.order(), 1));
  CosetTable t;
  std::unordered_map<Permutation, Point, PermutationHash> index;
  Permutation first = canonical_coset_rep(H.chain(), G.identity());
  index.emplace(first, 0);
  t.reps.push_back(first);
  const auto& gens = G.generators();
  t.action.assign(gens.size(), {});
  for (std::size_t k = 0; k < t.reps.size(); ++k) {
    for (std::size_t s = 0; s < gens.size(); ++s) {
      Permutation c = canonical_coset_rep(H.chain(), t.reps[k] * gens[s]);
      auto [it, inserted] = index.emplace(c, static_cast<Point>(t.reps.size()));
      if (inserted) t.reps.push_back(std::move(c));
      t.action[s].push_back(it->second);
    }
  }
  return t;
}

// Stabiliser of a point in an orbit computation, built from Schreier
// generators until it reaches the order fixed by the orbit length.
FiniteGroup stabilizer_from_orbit(const FiniteGroup& G, const std::vector<Permutation>& transversal,
                                  const std::vector<std::vector<std::size_t>>& moves,
                                  std::span<const Permutation> seed_gens) {
  const Order target = G.order() / transversal.size();
  StabChain chain(G.degree());
  std::vector<Permutation> kept;
  for (const auto& g : seed_gens)
    if (chain.extend(g)) kept.push_back(g);
  const auto& gens = G.generators();
  for (std::size_t x = 0; x < transversal.size() && chain.order() < target; ++x) {
    for (std::size_t s = 0; s < gens.size() && chain.order() < target; ++s) {
      Permutation sg = transversal[x] * gens[s];
      sg *= transversal[moves[x][s]].inverse();
      if (chain.extend(sg)) kept.push_back(std::move(sg));
    }
  }
  if (chain.order() != target) throw InternalError("stabiliser order does not match orbit length");
  return FiniteGroup(std::move(kept), G.degree());
}

FiniteGroup centralizer_of_element(const FiniteGroup& G, const Permutation& h) {
  if (G.generators().empty() || h.is_identity()) return G;
  if (std::all_of(G.generators().begin(), G.generators().end(),
                  [&](const Permutation& g) { return (h * g) == (g * h); }))
    return G;
  std::unordered_map<Permutation, std::size_t, PermutationHash> index;
  std::vector<Permutation> points{h};
  std::vector<Permutation> transversal{G.identity()};
  std::vector<std::vector<std::size_t>> moves;
  index.emplace(h, 0);
  const auto& gens = G.generators();
  for (std::size_t k = 0; k < points.size(); ++k) {
    moves.emplace_back(gens.size());
    for (std::size_t s = 0; s < gens.size(); ++s) {
      Permutation c = points[k].conjugate(gens[s]);
      auto [it, inserted] = index.emplace(c, points.size());
      if (inserted) {
        require_cap("elements", caps().elements, points.size() + 1);
        points.push_back(std::move(c));
        transversal.push_back(transversal[k] * gens[s]);
      }
      moves[k][s] = it->second;
    }
  }
  std::vector<Permutation> seed{h};
  if (!G.contains(h)) seed.clear();
  return stabilizer_from_orbit(G, transversal, moves, seed);
}

std::vector<Permutation> p_elements_from_words(const FiniteGroup& G, std::uint64_t p) {
  // Products of at most three generators, in lexicographic order of words.
  std::vector<Permutation> words;
  const auto& gens = G.generators();
  std::vector<Permutation> layer{G.identity()};
  for (int len = 1; len <= 3; ++len) {
    std::vector<Permutation> next;
    for (const auto& w : layer)
      for (const auto& s : gens) next.push_back(w * s);
    words.insert(words.end(), next.begin(), next.end());
    layer = std::move(next);
    if (layer.size() > 4096) break;
  }
  std::vector<Permutation> out;
  for (const auto& w : words) {
    Order o = w.order();
    Order pp = p_part(o, p);
    if (pp > 1) out.push_back(w.pow(static_cast<std::int64_t>(o / pp)));
  }
  return out;
}

FiniteGroup sylow_exhaustive(const FiniteGroup& G, std::uint64_t p, FiniteGroup P) {
  const Order target = p_part(G.order(), p);
  auto elems = G.elements();
  while (P.order() < target) {
    bool grown = false;
    for (const auto& g : elems) {
      if (P.contains(g) || p_part(g.order(), p) != g.order() || !normalizes(g, P)) continue;
      std::vector<Permutation> gens = P.generators();
      gens.push_back(g);
      P = subgroup_from(G.degree(), gens);
      grown = true;
      break;
    }
    if (!grown) throw InternalError("exhaustive Sylow search stalled");
  }
  return P;
}

}  // namespace

FiniteGroup group_from_generators(std::vector<Permutation> gens) { return FiniteGroup(std::move(gens)); }

FiniteGroup normal_closure(const FiniteGroup& G, std::span<const Permutation> X) {
  for (const auto& x : X)
    if (x.degree() != G.degree() || !G.contains(x))
      throw DomainError("normal_closure: element " + x.to_string() + " is not in the group");
  StabChain chain(G.degree());
  std::vector<Permutation> gens;
  for (const auto& x : X)
    if (chain.extend(x)) gens.push_back(x);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (const auto& g : G.generators()) {
      Permutation c = gens[i].conjugate(g);
      if (chain.extend(c)) gens.push_back(std::move(c));
    }
  }
  return FiniteGroup(std::move(gens), G.degree());
}

FiniteGroup normal_closure(const FiniteGroup& G, const FiniteGroup& H) {
  return normal_closure(G, std::span<const Permutation>(H.generators()));
}

FiniteGroup commutator_subgroup(const FiniteGroup& G, const FiniteGroup& A, const FiniteGroup& B) {
  std::vector<Permutation> comms;
  for (const auto& a : A.generators())
    for (const auto& b : B.generators()) {
      Permutation c = commutator(a, b);
      if (!c.is_identity()) comms.push_back(std::move(c));
    }
  return normal_closure(G, comms);
}

FiniteGroup derived_subgroup(const FiniteGroup& G) { return commutator_subgroup(G, G, G); }

DerivedData derived_series(const FiniteGroup& G) {
  std::vector<FiniteGroup> series{G};
  for (;;) {
    FiniteGroup next = derived_subgroup(series.back());
    if (next.order() == series.back().order()) break;
    series.push_back(std::move(next));
  }
  FiniteGroup terminal = series.back();
  return {std::move(series), std::move(terminal)};
}

FiniteGroup perfect_residual(const FiniteGroup& G) { return derived_series(G).terminal; }

FiniteGroup power_subgroup(const FiniteGroup& G, const FiniteGroup& H, std::uint64_t r) {
  if (r == 0) throw DomainError("power_subgroup: r must be positive");
  require_subgroup(G, H, "power_subgroup");
  if (r == 1) return H;
  StabChain chain(G.degree());
  std::vector<Permutation> gens;
  auto add = [&](const Permutation& h) {
    Permutation x = h.pow(static_cast<std::int64_t>(r % h.order()));
    if (chain.extend(x)) gens.push_back(std::move(x));
  };
  for (const auto& h : H.generators()) add(h);
  require_cap("elements", caps().elements, H.order());
  H.for_each_element(add);
  return FiniteGroup(std::move(gens), G.degree());
}

SubnormalResult is_subnormal(const FiniteGroup& G, const FiniteGroup& H) {
  require_subgroup(G, H, "is_subnormal");
  FiniteGroup X = G;
  unsigned steps = 0;
  for (;;) {
    if (X.order() == H.order()) return {true, steps};
    FiniteGroup Y = normal_closure(X, H);
    if (Y.order() == X.order()) return {false, std::nullopt};
    X = std::move(Y);
    ++steps;
  }
}

FiniteGroup centralizer_of(const FiniteGroup& G, std::span<const Permutation> X) {
  FiniteGroup C = G;
  for (const auto& x : X) {
    if (x.degree() != G.degree()) throw DomainError("centralizer: degree mismatch");
    C = centralizer_of_element(C, x);
  }
  return C;
}

FiniteGroup centralizer(const FiniteGroup& G, const FiniteGroup& H) {
  require_subgroup(G, H, "centralizer");
  return centralizer_of(G, H.generators());
}

FiniteGroup center(const FiniteGroup& G) { return centralizer_of(G, G.generators()); }

std::uint64_t element_set_hash(const FiniteGroup& H) {
  std::uint64_t h = H.order();
  H.for_each_element([&](const Permutation& e) { h += mix64(e.hash()); });
  return h;
}

FiniteGroup normalizer(const FiniteGroup& G, const FiniteGroup& H) {
  require_subgroup(G, H, "normalizer");
  if (is_normal_in(G, H)) return G;
  require_cap("elements", caps().elements, H.order());
  const auto elems = H.elements();
  auto key = [&](const Permutation& u) {
    std::uint64_t h = H.order();
    for (const auto& e : elems) h += mix64(e.conjugate(u).hash());
    return h;
  };
  std::unordered_multimap<std::uint64_t, std::size_t> index;
  std::vector<Permutation> transversal{G.identity()};
  std::vector<std::vector<std::size_t>> moves;
  index.emplace(key(G.identity()), 0);
  const auto& gens = G.generators();
  for (std::size_t k = 0; k < transversal.size(); ++k) {
    moves.emplace_back(gens.size());
    for (std::size_t s = 0; s < gens.size(); ++s) {
      Permutation u = transversal[k] * gens[s];
      const std::uint64_t h = key(u);
      std::size_t found = transversal.size();
      auto [lo, hi] = index.equal_range(h);
      for (auto it = lo; it != hi; ++it) {
        if (normalizes(u * transversal[it->second].inverse(), H)) {
          found = it->second;
          break;
        }
      }
      if (found == transversal.size()) {
        require_cap("elements", caps().elements, transversal.size() + 1);
        index.emplace(h, found);
        transversal.push_back(std::move(u));
      }
      moves[k][s] = found;
    }
  }
  return stabilizer_from_orbit(G, transversal, moves, H.generators());
}

FiniteGroup intersection(const FiniteGroup& A, const FiniteGroup& B) {
  if (A.degree() != B.degree()) throw DomainError("intersection: degree mismatch");
  if (B.contains(A)) return A;
  if (A.contains(B)) return B;
  const FiniteGroup& small = A.order() <= B.order() ? A : B;
  const FiniteGroup& large = A.order() <= B.order() ? B : A;
  require_cap("elements", caps().elements, small.order());
  StabChain chain(A.degree());
  std::vector<Permutation> gens;
  const Order bound = std::gcd(A.order(), B.order());
  small.for_each_element([&](const Permutation& e) {
    if (chain.order() == bound) return;
    if (!chain.contains(e) && large.contains(e) && chain.extend(e)) gens.push_back(e);
  });
  return FiniteGroup(std::move(gens), A.degree());
}

FiniteGroup conjugate_subgroup(const FiniteGroup& H, const Permutation& g) {
  std::vector<Permutation> gens;
  gens.reserve(H.generators().size());
  for (const auto& h : H.generators()) gens.push_back(h.conjugate(g));
  return FiniteGroup(std::move(gens), H.degree());
}

FiniteGroup point_stabilizer(const FiniteGroup& G, Point point) {
  if (point >= G.degree()) throw DomainError("point_stabilizer: point out of range");
  const Point prefix[] = {point};
  StabChain chain(G.degree(), G.generators(), prefix);
  if (chain.levels().size() < 2) return FiniteGroup::trivial(G.degree());
  return subgroup_from(G.degree(), chain.levels()[1].gens);
}

bool canonical_less(const FiniteGroup& a, const FiniteGroup& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  if (a == b) return false;
  auto ea = a.elements();
  auto eb = b.elements();
  return ea < eb;
}

void sort_canonical(std::vector<FiniteGroup>& groups) {
  // decorate once; element lists are the expensive part
  std::vector<std::pair<std::vector<Permutation>, std::size_t>> keys;
  keys.reserve(groups.size());
  for (std::size_t i = 0; i < groups.size(); ++i) keys.emplace_back(groups[i].elements(), i);
  std::sort(keys.begin(), keys.end(), [](const auto& x, const auto& y) {
    if (x.first.size() != y.first.size()) return x.first.size() < y.first.size();
    return x.first < y.first;
  });
  std::vector<FiniteGroup> out;
  out.reserve(groups.size());
  for (const auto& k : keys) out.push_back(groups[k.second]);
  groups = std::move(out);
}

ConjugacyClasses conjugacy_classes(const FiniteGroup& G) {
  auto elems = G.elements();
  std::unordered_map<Permutation, std::size_t, PermutationHash> index;
  index.reserve(elems.size());
  for (std::size_t i = 0; i < elems.size(); ++i) index.emplace(elems[i], i);
  std::vector<bool> seen(elems.size(), false);
  ConjugacyClasses out;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (seen[i]) continue;
    std::vector<std::size_t> cls{i};
    seen[i] = true;
    for (std::size_t k = 0; k < cls.size(); ++k)
      for (const auto& g : G.generators()) {
        std::size_t j = index.at(elems[cls[k]].conjugate(g));
        if (!seen[j]) {
          seen[j] = true;
          cls.push_back(j);
        }
      }
    out.representatives.push_back(elems[i]);
    out.sizes.push_back(cls.size());
  }
  return out;
}

FiniteGroup sylow_subgroup(const FiniteGroup& G, std::uint64_t p, std::uint64_t seed) {
  if (!is_prime(p)) throw DomainError("sylow_subgroup: " + std::to_string(p) + " is not prime");
  const Order target = p_part(G.order(), p);
  if (target == 1) return FiniteGroup::trivial(G.degree());
  if (target == G.order()) return G;

  // Start from a p-element of maximal order among short generator words.
  FiniteGroup P = FiniteGroup::trivial(G.degree());
  {
    auto cands = p_elements_from_words(G, p);
    const Permutation* best = nullptr;
    for (const auto& c : cands)
      if (best == nullptr || c.order() > best->order()) best = &c;
    if (best != nullptr) P = FiniteGroup({*best}, G.degree());
  }

  std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + p);
  const int max_attempts = 400 + 40 * static_cast<int>(G.degree());
  while (P.order() < target) {
    FiniteGroup N = P.is_trivial() ? G : normalizer(G, P);
    bool grown = false;
    for (int t = 0; t < max_attempts && !grown; ++t) {
      Permutation g = N.random_element(rng);
      Order o = g.order();
      Order pp = p_part(o, p);
      if (pp == 1) continue;
      Permutation y = g.pow(static_cast<std::int64_t>(o / pp));
      if (P.contains(y)) continue;
      std::vector<Permutation> gens = P.generators();
      gens.push_back(std::move(y));
      P = subgroup_from(G.degree(), gens);
      grown = true;
    }
    if (!grown) {
      if (G.order() <= caps().sylow_exhaustive) return sylow_exhaustive(G, p, P);
      throw InternalError("Sylow growth found no p-element in the normaliser");
    }
  }
  if (P.order() != target) throw InternalError("Sylow subgroup has the wrong order");
  return P;
}

bool are_conjugate(const FiniteGroup& G, const FiniteGroup& A, const FiniteGroup& B) {
  require_subgroup(G, A, "are_conjugate");
  require_subgroup(G, B, "are_conjugate");
  if (A.order() != B.order()) return false;
  require_cap("elements", caps().elements, G.order());
  bool found = false;
  G.for_each_element([&](const Permutation& g) {
    if (found) return;
    found = std::all_of(A.generators().begin(), A.generators().end(),
                        [&](const Permutation& a) { return B.contains(a.conjugate(g)); });
  });
  return found;
}

Homomorphism coset_action(const FiniteGroup& G, const FiniteGroup& H) {
  require_subgroup(G, H, "coset_action");
  CosetTable t = enumerate_cosets(G, H);
  const std::size_t m = t.reps.size();
  std::vector<Permutation> images;
  images.reserve(t.action.size());
  for (auto& row : t.action) images.emplace_back(std::move(row));
  if (images.empty()) images.clear();
  FiniteGroup image = subgroup_from(m, images);
  return Homomorphism(G, std::move(image), std::move(images));
}

std::vector<Permutation> right_coset_representatives(const FiniteGroup& G, const FiniteGroup& H) {
  require_subgroup(G, H, "right_coset_representatives");
  return enumerate_cosets(G, H).reps;
}

Order count_cosets(const FiniteGroup& G, const FiniteGroup& H) {
  require_subgroup(G, H, "count_cosets");
  return enumerate_cosets(G, H).reps.size();
}

Quotient quotient_with_projection(const FiniteGroup& G, const FiniteGroup& N) {
  require_subgroup(G, N, "quotient_with_projection");
  if (!is_normal_in(G, N)) throw DomainError("quotient_with_projection: subgroup is not normal");
  if (N.is_trivial()) return {G, Homomorphism::identity(G)};
  if (N.order() == G.order()) {
    FiniteGroup one = FiniteGroup::trivial(1);
    std::vector<Permutation> imgs(G.generators().size(), Permutation(1));
    return {one, Homomorphism(G, one, std::move(imgs))};
  }
  Homomorphism act = coset_action(G, N);
  FiniteGroup Q = act.codomain();
  return {std::move(Q), std::move(act)};
}

bool is_abelian(const FiniteGroup& G) {
  const auto& g = G.generators();
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j)
      if (g[i] * g[j] != g[j] * g[i]) return false;
  return true;
}

bool is_perfect(const FiniteGroup& G) { return derived_subgroup(G).order() == G.order(); }

bool is_soluble(const FiniteGroup& G) { return derived_series(G).terminal.is_trivial(); }

bool is_p_group(const FiniteGroup& G, std::uint64_t p) { return p_part(G.order(), p) == G.order(); }

bool is_nilpotent(const FiniteGroup& G) {
  if (is_abelian(G)) return true;
  for (auto p : prime_divisors(G.order())) {
    if (is_p_group(G, p)) return true;
    if (!is_normal_in(G, sylow_subgroup(G, p))) return false;
  }
  return true;
}

Order exponent(const FiniteGroup& G) {
  Order e = 1;
  if (G.order() <= caps().elements) {
    G.for_each_element([&](const Permutation& g) { e = std::lcm(e, g.order()); });
    return e;
  }
  for (auto p : prime_divisors(G.order())) {
    FiniteGroup P = sylow_subgroup(G, p);
    require_cap("elements", caps().elements, P.order());
    Order m = 1;
    P.for_each_element([&](const Permutation& g) { m = std::max(m, g.order()); });
    e *= m;
  }
  return e;
}

bool is_elementary_abelian(const FiniteGroup& G) {
  if (G.is_trivial()) return true;
  auto primes = prime_divisors(G.order());
  if (primes.size() != 1 || !is_abelian(G)) return false;
  return std::all_of(G.generators().begin(), G.generators().end(), [&](const Permutation& g) {
    return g.is_identity() || g.order() == primes.front();
  });
}

StructurePredicates structure_predicates(const FiniteGroup& G) {
  StructurePredicates r;
  auto ds = derived_series(G);
  r.is_perfect = ds.series.size() == 1;
  r.is_soluble = ds.terminal.is_trivial();
  r.is_nilpotent = is_nilpotent(G);
  r.exponent = exponent(G);
  return r;
}

}  // namespace fitkit
