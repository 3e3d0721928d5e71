#include "fitkit/fitting.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "fitkit/caps.hpp"
#include "fitkit/element_table.hpp"
#include "fitkit/errors.hpp"
#include "fitkit/lattice.hpp"
#include "fitkit/numtheory.hpp"
#include "fitkit/perm_core.hpp"

namespace fitkit {

namespace {

bool is_pi_group(Order n, std::span<const std::uint64_t> pi) {
  for (auto p : prime_divisors(n))
    if (std::find(pi.begin(), pi.end(), p) == pi.end()) return false;
  return true;
}

// [X, G] X^r for X normal in G. X/[X,G] is central, so the r-th powers of
// X's generators already give (X^r)[X,G].
FiniteGroup next_r_term(const FiniteGroup& G, const FiniteGroup& X, std::uint64_t r) {
  FiniteGroup C = commutator_subgroup(G, X, G);
  std::vector<Permutation> gens = C.generators();
  for (const auto& x : X.generators()) gens.push_back(x.pow(static_cast<std::int64_t>(r % x.order())));
  return subgroup_from(G.degree(), gens);
}

// ---- table-side helpers for the oracle ----

bool table_nilpotent(const ElementTable& T, const TableSubgroup& H) {
  ElementSet z = T.empty_set();
  z.set(0);
  const auto elems = H.elements.indices();
  for (;;) {
    ElementSet next = T.empty_set();
    std::size_t n = 0;
    for (ElementIndex x : elems)
      if (std::all_of(H.gens.begin(), H.gens.end(), [&](ElementIndex h) { return z.test(T.comm(x, h)); })) {
        next.set(x);
        ++n;
      }
    if (n == elems.size()) return true;
    if (next == z) return false;
    z = std::move(next);
  }
}

bool table_quasisimple(const ElementTable& T, const TableSubgroup& H) {
  if (H.order() == 1) return false;
  if (T.commutator(H, H, H).elements != H.elements) return false;
  TableSubgroup Z = T.center(H);
  for (ElementIndex x : H.elements.indices()) {
    if (Z.elements.test(x)) continue;
    const ElementIndex g[] = {x};
    TableSubgroup N = T.normal_closure(H, T.closure(g));
    if (T.join(N, Z).elements != H.elements) return false;
  }
  return true;
}

bool table_subnormal(const ElementTable& T, const TableSubgroup& G, const TableSubgroup& H) {
  TableSubgroup K = G;
  while (K.elements != H.elements) {
    TableSubgroup N = T.normal_closure(K, H);
    if (N.elements == K.elements) return false;
    K = std::move(N);
  }
  return true;
}

std::vector<TableSubgroup> table_all_subgroups(const ElementTable& T) {
  std::unordered_set<ElementSet, ElementSetHash> seen;
  std::vector<TableSubgroup> cyclic, all;
  for (ElementIndex x = 0; x < T.size(); ++x) {
    const ElementIndex g[] = {x};
    TableSubgroup c = T.closure(g);
    if (seen.insert(c.elements).second) cyclic.push_back(std::move(c));
  }
  seen.clear();
  all.push_back(T.trivial());
  seen.insert(all.back().elements);
  for (std::size_t i = 0; i < all.size(); ++i)
    for (const auto& c : cyclic) {
      TableSubgroup j = T.join(all[i], c);
      if (seen.insert(j.elements).second) all.push_back(std::move(j));
    }
  return all;
}

}  // namespace

FiniteGroup o_p(const FiniteGroup& G, std::uint64_t p) {
  if (!is_prime(p)) throw DomainError("o_p: " + std::to_string(p) + " is not prime");
  if (G.order() % p != 0) return FiniteGroup::trivial(G.degree());
  return core(G, sylow_subgroup(G, p));
}

FiniteGroup o_pi(const FiniteGroup& G, std::span<const std::uint64_t> pi) {
  std::vector<std::uint64_t> present;
  for (auto p : prime_divisors(G.order()))
    if (std::find(pi.begin(), pi.end(), p) != pi.end()) present.push_back(p);
  if (present.empty()) return FiniteGroup::trivial(G.degree());
  if (present.size() == 1) return o_p(G, present.front());
  FiniteGroup out = FiniteGroup::trivial(G.degree());
  for (const auto& N : normal_subgroups(G).members)
    if (is_pi_group(N.order(), present)) out = join(out, N);
  return out;
}

FiniteGroup fitting_subgroup(const FiniteGroup& G) {
  std::vector<FiniteGroup> parts;
  for (auto p : prime_divisors(G.order())) parts.push_back(o_p(G, p));
  return join(parts, G.degree());
}

bool is_quasisimple(const FiniteGroup& G) {
  if (G.is_trivial() || !is_perfect(G)) return false;
  FiniteGroup Z = center(G);
  // G/Z is simple iff every x outside Z has <x^G> Z = G
  for (const auto& rep : conjugacy_classes(G).representatives) {
    if (Z.contains(rep)) continue;
    const Permutation x[] = {rep};
    if (join(normal_closure(G, x), Z).order() != G.order()) return false;
  }
  return true;
}

std::vector<FiniteGroup> components(const FiniteGroup& G) {
  std::vector<FiniteGroup> out;
  if (G.is_trivial()) return out;
  FiniteGroup F = fitting_subgroup(G);
  FiniteGroup C = centralizer(G, F);
  FiniteGroup Z = intersection(C, F);
  Quotient q = quotient_with_projection(C, Z);
  if (q.group.is_trivial()) return out;
  for (const auto& N : minimal_normal_subgroups(q.group)) {
    if (is_abelian(N)) continue;
    for (const auto& T : minimal_normal_subgroups(N)) {
      FiniteGroup R = perfect_residual(q.projection.preimage(T));
      if (!is_quasisimple(R) || !is_subnormal(G, R).subnormal)
        throw InternalError("components: pulled-back factor is not a component");
      out.push_back(std::move(R));
    }
  }
  sort_canonical(out);
  return out;
}

FiniteGroup layer(const FiniteGroup& G) { return join(components(G), G.degree()); }

FittingReport generalized_fitting(const FiniteGroup& G) {
  FittingReport r{G, fitting_subgroup(G), components(G), G, G, G, G};
  r.layer = join(r.components, G.degree());
  r.fstar = join(r.fitting, r.layer);
  r.center_of_fitting = center(r.fitting);
  r.centralizer_of_fstar = centralizer(G, r.fstar);
  return r;
}

FiniteGroup nilpotent_residual(const FiniteGroup& G) {
  FiniteGroup K = G;
  for (;;) {
    FiniteGroup next = commutator_subgroup(G, K, G);
    if (next.order() == K.order()) return K;
    K = std::move(next);
  }
}

bool is_fstar_group(const FiniteGroup& G) {
  FittingReport r = generalized_fitting(G);
  const bool direct = r.fstar.order() == G.order();
  const bool perfect_mod_f = join(derived_subgroup(G), r.fitting).order() == G.order();
  const bool nilpotent_mod_e = r.layer.contains(nilpotent_residual(G));
  if (direct != (perfect_mod_f && nilpotent_mod_e))
    throw InternalError("is_fstar_group: the two criteria disagree");
  return direct;
}

unsigned d_p(const FiniteGroup& G, std::uint64_t p) {
  if (!is_prime(p)) throw DomainError("d_p: " + std::to_string(p) + " is not prime");
  if (G.order() % p != 0) return 0;
  FiniteGroup S = sylow_subgroup(G, p);
  FiniteGroup phi = next_r_term(S, S, p);
  return p_valuation(S.order() / phi.order(), p);
}

LowerRSeries lower_r_series(const FiniteGroup& G, std::uint64_t r) {
  if (r == 0) throw DomainError("lower_r_series: r must be positive");
  LowerRSeries s{G, r, {G}, G};
  for (;;) {
    FiniteGroup next = next_r_term(G, s.terms.back(), r);
    if (next.order() == s.terms.back().order()) break;
    s.terms.push_back(std::move(next));
  }
  s.stable = s.terms.back();
  return s;
}

HypothesisCheck tate_verify(const FiniteGroup& G, const FiniteGroup& H, std::uint64_t r) {
  require_subgroup(G, H, "tate_verify");
  LowerRSeries sg = lower_r_series(G, r);
  LowerRSeries sh = lower_r_series(H, r);
  HypothesisCheck out;
  const bool coprime = std::gcd(G.order() / H.order(), r) == 1;
  out.hypothesis_holds = coprime && sh.term(1) == intersection(sg.term(1), H);
  const std::size_t last = std::max(sg.terms.size(), sh.terms.size());
  out.conclusion_holds = true;
  for (std::size_t k = 0; k <= last && out.conclusion_holds; ++k)
    out.conclusion_holds = sh.term(k) == intersection(sg.term(k), H);
  out.conclusion_holds = out.conclusion_holds && sh.stable == intersection(sg.stable, H);
  return out;
}

HypothesisCheck cor213_verify(const FiniteGroup& G, const FiniteGroup& N, std::uint64_t p) {
  require_subgroup(G, N, "cor213_verify");
  if (!is_normal_in(G, N)) throw DomainError("cor213_verify: subgroup is not normal");
  if (!is_prime(p)) throw DomainError("cor213_verify: " + std::to_string(p) + " is not prime");
  FiniteGroup S = sylow_subgroup(G, p);
  FiniteGroup phi = next_r_term(S, S, p);
  HypothesisCheck out;
  out.hypothesis_holds = phi.contains(intersection(S, N));
  FiniteGroup stable = lower_r_series(N, p).stable;
  out.conclusion_holds = is_normal_in(N, stable) && stable.order() == N.order() / p_part(N.order(), p);
  return out;
}

TheoremBCheck theorem_b_verify(const FiniteGroup& G) {
  FittingReport r = generalized_fitting(G);
  TheoremBCheck out{r.centralizer_of_fstar, r.center_of_fitting, false};
  out.equal = out.lhs == out.rhs;
  return out;
}

OracleJoins brute_force_joins(const FiniteGroup& G) {
  ElementTable T(G, caps().oracle, "oracle");
  const TableSubgroup W = T.whole();
  TableSubgroup nil = T.trivial(), qs = T.trivial();
  for (const auto& H : table_all_subgroups(T)) {
    if (!table_subnormal(T, W, H)) continue;
    if (table_nilpotent(T, H)) nil = T.join(nil, H);
    if (table_quasisimple(T, H)) qs = T.join(qs, H);
  }
  return {T.to_group(nil), T.to_group(qs), T.to_group(T.join(nil, qs))};
}

FiniteGroup brute_force_fstar_oracle(const FiniteGroup& G) { return brute_force_joins(G).fstar; }

}  // namespace fitkit
