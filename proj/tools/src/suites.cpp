#include "fitkit_cli/suites.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>

#include "fitkit/caps.hpp"
#include "fitkit/errors.hpp"
#include "fitkit/fitting.hpp"
#include "fitkit/lattice.hpp"
#include "fitkit/numtheory.hpp"
#include "fitkit/perm_core.hpp"
#include "fitkit/supernatural.hpp"
#include "fitkit/tower.hpp"

namespace fitkit::cli {

namespace {

using Corpus = std::vector<CorpusEntry>;

std::vector<const CorpusEntry*> select(const Corpus& corpus, const SuiteOptions& o, Order limit = 0) {
  std::vector<const CorpusEntry*> out;
  for (const auto& e : corpus) {
    if (o.max_order && e.group.order() > *o.max_order) continue;
    if (limit && e.group.order() > limit) continue;
    out.push_back(&e);
  }
  return out;
}

bool commute(const FiniteGroup& A, const FiniteGroup& B) {
  for (const auto& a : A.generators())
    for (const auto& b : B.generators())
      if (a * b != b * a) return false;
  return true;
}

std::string ok_order(const FiniteGroup& H) { return "order " + std::to_string(H.order()); }

// ---- 1 ----
void theorem_b(const Corpus& corpus, const SuiteOptions& o, SuiteReport& r) {
  Corpus extra;
  if (o.random_k > 0) {
    extra = random_groups(o.random_k, o.random_n, o.seed);
  } else {
    for (std::size_t n = 4; n <= 8; ++n)
      for (auto& e : random_groups(10, n, o.seed * 1000 + n)) extra.push_back(std::move(e));
  }
  std::vector<const CorpusEntry*> all = select(corpus, o);
  for (const auto& e : extra) all.push_back(&e);
  for (const auto* e : all) {
    auto b = theorem_b_verify(e->group);
    const std::string g = "|G| = " + std::to_string(e->group.order()) + ", ";
    r.cases.push_back({e->name, b.equal,
                       g + (b.equal ? "C_G(F*) " + ok_order(b.lhs) : describe_pair("C_G(F*)", b.lhs, "Z(F)", b.rhs))});
  }
}

// ---- 2 ----
void oracle_fstar(const Corpus& corpus, const SuiteOptions& o, SuiteReport& r) {
  const Order limit = std::min<Order>(o.max_order.value_or(caps().oracle), caps().oracle);
  std::size_t skipped = 0;
  for (const auto& e : corpus) {
    if (e.group.order() > limit) {
      ++skipped;
      continue;
    }
    FittingReport f = generalized_fitting(e.group);
    OracleJoins j = brute_force_joins(e.group);
    std::string detail;
    if (!(f.fstar == j.fstar)) detail = describe_pair("F*", f.fstar, "oracle", j.fstar);
    else if (!(f.fitting == j.nilpotent)) detail = describe_pair("F", f.fitting, "oracle", j.nilpotent);
    else if (!(f.layer == j.quasisimple)) detail = describe_pair("E", f.layer, "oracle", j.quasisimple);
    const bool pass = detail.empty();
    r.cases.push_back({e.name, pass, pass ? "F* " + ok_order(f.fstar) : detail});
  }
  r.notes.push_back("orders up to " + std::to_string(limit) + "; " + std::to_string(skipped) +
                    " larger corpus groups skipped");
}

// ---- 3 ----
void central_product(const Corpus& corpus, const SuiteOptions& o, SuiteReport& r) {
  for (const auto* e : select(corpus, o)) {
    FittingReport f = generalized_fitting(e->group);
    std::string detail;
    for (std::size_t a = 0; a < f.components.size() && detail.empty(); ++a) {
      if (!commute(f.components[a], f.fitting))
        detail = "[Q,F] != 1: " + describe_pair("Q", f.components[a], "F", f.fitting);
      for (std::size_t b = a + 1; b < f.components.size() && detail.empty(); ++b)
        if (!commute(f.components[a], f.components[b]))
          detail = "[Q_a,Q_b] != 1: " + describe_pair("Q_a", f.components[a], "Q_b", f.components[b]);
    }
    const bool pass = detail.empty();
    r.cases.push_back({e->name, pass, pass ? std::to_string(f.components.size()) + " components" : detail});
  }
}

// ---- 4 ----
void minimal_normal(const Corpus& corpus, const SuiteOptions& o, SuiteReport& r) {
  for (const auto* e : select(corpus, o)) {
    if (e->group.is_trivial()) continue;
    FittingReport f = generalized_fitting(e->group);
    auto mins = minimal_normal_subgroups(e->group);
    std::string detail;
    for (const auto& N : mins)
      if (!is_abelian(N) && !f.layer.contains(N)) {
        detail = "nonabelian and outside E: " + describe_pair("N", N, "E", f.layer);
        break;
      }
    const bool pass = detail.empty();
    r.cases.push_back({e->name, pass, pass ? std::to_string(mins.size()) + " minimal normal" : detail});
  }
}

// ---- 5 ----
// One failing case per (M, claim); a group with no failures gets one pass.
void prop34(const Corpus& corpus, const SuiteOptions& o, SuiteReport& r) {
  std::size_t e_fail = 0;
  for (const auto* e : select(corpus, o, caps().normal_lattice)) {
    FittingReport f = generalized_fitting(e->group);
    auto lattice = normal_subgroups(e->group);
    const std::size_t before = r.cases.size();
    for (std::size_t k = 0; k < lattice.members.size(); ++k) {
      const FiniteGroup& M = lattice.members[k];
      const std::string tag = e->name + " M#" + std::to_string(k) + " (order " + std::to_string(M.order()) + ")";
      const bool fstar_group = is_fstar_group(M);
      if (fstar_group != f.fstar.contains(M))
        r.cases.push_back({tag + " M F*-group iff M <= F*(G)", false,
                           std::string("is_fstar_group(M) = ") + (fstar_group ? "true" : "false") + ": " +
                               describe_pair("M", M, "F*(G)", f.fstar)});
      FiniteGroup eg = intersection(f.layer, M), em = layer(M);
      if (!(em == eg)) {
        ++e_fail;
        r.cases.push_back({tag + " E(M) = E(G) ∩ M", false, describe_pair("E(M)", em, "E(G)∩M", eg)});
      }
      FiniteGroup fg = intersection(f.fitting, M), fm = fitting_subgroup(M);
      if (!(fm == fg))
        r.cases.push_back({tag + " F(M) = F(G) ∩ M", false, describe_pair("F(M)", fm, "F(G)∩M", fg)});
      // what does hold: the components of M are the components of G inside M
      std::vector<FiniteGroup> inside;
      for (const auto& Q : f.components)
        if (M.contains(Q)) inside.push_back(Q);
      FiniteGroup ej = join(inside, M.degree());
      if (!(em == ej))
        r.cases.push_back({tag + " E(M) = join of components of G in M", false,
                           describe_pair("E(M)", em, "join", ej)});
    }
    if (r.cases.size() == before)
      r.cases.push_back({e->name, true, std::to_string(lattice.members.size()) + " normal subgroups"});
  }
  if (e_fail)
    r.notes.push_back("E(M) != E(G) ∩ M for " + std::to_string(e_fail) + " normal subgroup(s); for a central M "
                      "inside a quasisimple E(G) the right side is M and the left side is 1");
}

// ---- 6 ----
std::vector<std::vector<std::uint64_t>> proper_subsets(const std::vector<std::uint64_t>& ps) {
  std::vector<std::vector<std::uint64_t>> out;
  const std::size_t n = ps.size();
  for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << n); ++mask) {
    std::vector<std::uint64_t> s;
    for (std::size_t k = 0; k < n; ++k)
      if (mask >> k & 1) s.push_back(ps[k]);
    out.push_back(std::move(s));
  }
  return out;
}

std::string pi_name(const std::vector<std::uint64_t>& pi) {
  std::string s = "{";
  for (std::size_t k = 0; k < pi.size(); ++k) s += (k ? "," : "") + std::to_string(pi[k]);
  return s + "}";
}

void sylow_hall(const Corpus& corpus, const SuiteOptions& o, SuiteReport& r) {
  constexpr Order kConjugacyLimit = 200;
  for (const auto* e : select(corpus, o)) {
    const FiniteGroup& G = e->group;
    const auto primes = prime_divisors(G.order());
    for (auto p : primes) {
      FiniteGroup S = sylow_subgroup(G, p, o.seed), T = sylow_subgroup(G, p, o.seed + 1);
      std::string detail;
      if (S.order() != p_part(G.order(), p) || T.order() != S.order())
        detail = "Sylow order is not the p-part: " + describe_pair("S", S, "T", T);
      else if (G.order() <= kConjugacyLimit && !are_conjugate(G, S, T))
        detail = "seeded Sylow subgroups not conjugate: " + describe_pair("S", S, "T", T);
      const bool pass = detail.empty();
      r.cases.push_back({e->name + " Sylow p=" + std::to_string(p), pass, pass ? ok_order(S) : detail});
    }
    if (!is_soluble(G) || primes.size() < 2) continue;
    for (const auto& pi : proper_subsets(primes)) {
      Order part = 1;
      for (auto p : pi) part *= p_part(G.order(), p);
      auto H = hall_subgroup(G, pi, o.seed), K = hall_subgroup(G, pi, o.seed + 1);
      std::string detail;
      if (!H || !K) detail = "no Hall subgroup found";
      else if (H->order() != part) detail = "Hall order " + std::to_string(H->order()) + ", expected " + std::to_string(part);
      else if (G.order() <= kConjugacyLimit && !are_conjugate(G, *H, *K))
        detail = "Hall subgroups not conjugate: " + describe_pair("H", *H, "K", *K);
      const bool pass = detail.empty();
      r.cases.push_back({e->name + " Hall pi=" + pi_name(pi), pass, pass ? ok_order(*H) : detail});
    }
  }
  r.notes.push_back("conjugacy of seeded Sylow/Hall subgroups checked exhaustively for orders <= " +
                    std::to_string(kConjugacyLimit));
}

// ---- 7 ----
void tate(const Corpus& corpus, const SuiteOptions& o, SuiteReport& r) {
  std::size_t instances = 0, skipped = 0;
  bool s3_seen = false;
  auto run = [&](const CorpusEntry& e, const FiniteGroup& H, std::uint64_t rr, const std::string& label) {
    HypothesisCheck c = tate_verify(e.group, H, rr);
    if (!c.hypothesis_holds) {
      ++skipped;
      return;
    }
    ++instances;
    if (e.name == "S3" && H.order() == 2 && rr == 2) s3_seen = true;
    r.cases.push_back({e.name + " " + label + " r=" + std::to_string(rr), c.conclusion_holds,
                       c.conclusion_holds ? "H " + ok_order(H) : "Phi^k_r(H) != Phi^k_r(G) ∩ H for some k"});
  };
  for (const auto* e : select(corpus, o)) {
    const FiniteGroup& G = e->group;
    const auto primes = prime_divisors(G.order());
    for (auto p : primes) run(*e, sylow_subgroup(G, p, o.seed), p, "Sylow " + std::to_string(p));
    if (!is_soluble(G) || primes.size() < 3) continue;
    for (const auto& pi : proper_subsets(primes)) {
      if (pi.size() < 2) continue;
      auto H = hall_subgroup(G, pi, o.seed);
      if (!H) continue;
      for (auto rr : pi) run(*e, *H, rr, "Hall " + pi_name(pi));
    }
  }
  r.cases.push_back({"at least 10 instances satisfy the hypothesis", instances >= 10, std::to_string(instances) + " instances"});
  r.cases.push_back({"(S3, C2, 2) is an instance", s3_seen, s3_seen ? "" : "not found in corpus run"});
  r.notes.push_back(std::to_string(skipped) + " (G, H, r) triples fail the hypothesis and are not tested");
}

// ---- 8 ----
void cor213(const Corpus& corpus, const SuiteOptions& o, SuiteReport& r) {
  std::size_t instances = 0;
  bool s3_seen = false;
  for (const auto* e : select(corpus, o, caps().normal_lattice)) {
    const FiniteGroup& G = e->group;
    auto lattice = normal_subgroups(G);
    for (auto p : prime_divisors(G.order())) {
      std::size_t here = 0;
      std::string detail;
      for (const auto& N : lattice.members) {
        HypothesisCheck c = cor213_verify(G, N, p);
        if (!c.hypothesis_holds) continue;
        ++here;
        if (e->name == "S3" && N.order() == 3 && p == 2) s3_seen = true;
        if (!c.conclusion_holds && detail.empty())
          detail = "Phi^inf_p(N) wrong for N " + describe(N);
      }
      instances += here;
      const bool pass = detail.empty();
      r.cases.push_back({e->name + " p=" + std::to_string(p), pass,
                         pass ? std::to_string(here) + " normal subgroups satisfy the hypothesis" : detail});
    }
  }
  r.cases.push_back({"(S3, A3, 2) is an instance", s3_seen, s3_seen ? "" : "not found in corpus run"});
  r.notes.push_back(std::to_string(instances) + " (G, N, p) instances satisfy the hypothesis");
}

// ---- 11 ----
Supernatural random_supernatural(std::mt19937_64& rng, bool finite) {
  static constexpr std::uint64_t kPrimes[] = {2, 3, 5, 7, 11, 13};
  Supernatural s;
  for (auto p : kPrimes) {
    const auto roll = rng() % 8;
    if (roll < 3) continue;
    const std::uint64_t e = (!finite && roll == 7) ? Supernatural::kInfinity : rng() % 6;
    if (e) s = multiply(s, Supernatural::prime_power(p, e));
  }
  return s;
}

void supernatural(const Corpus& corpus, const SuiteOptions& o, SuiteReport& r) {
  constexpr int kCases = 1000;
  std::mt19937_64 rng(o.seed);
  std::map<std::string, std::string> first_failure;
  const char* props[] = {"multiply associative", "multiply commutative", "multiply identity",
                         "lcm associative",      "lcm commutative",      "lcm idempotent",
                         "divide round trip",    "text round trip"};
  for (int k = 0; k < kCases; ++k) {
    const Supernatural a = random_supernatural(rng, false), b = random_supernatural(rng, false),
                       c = random_supernatural(rng, false), f = random_supernatural(rng, true);
    const Supernatural one;
    auto check = [&](const char* name, bool ok) {
      if (!ok && !first_failure.count(name))
        first_failure[name] = "case " + std::to_string(k) + ": a=" + a.to_string() + " b=" + b.to_string() +
                              " c=" + c.to_string() + " f=" + f.to_string();
    };
    check(props[0], multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
    check(props[1], multiply(a, b) == multiply(b, a));
    check(props[2], multiply(a, one) == a);
    check(props[3], lcm(lcm(a, b), c) == lcm(a, lcm(b, c)));
    check(props[4], lcm(a, b) == lcm(b, a));
    check(props[5], lcm(a, a) == a);
    check(props[6], divide_exact(multiply(a, f), f) == a && divides(f, multiply(a, f)));
    check(props[7], Supernatural::parse(a.to_string()) == a);
  }
  for (const char* p : props) {
    auto it = first_failure.find(p);
    r.cases.push_back({std::string(p) + " (" + std::to_string(kCases) + " cases)", it == first_failure.end(),
                       it == first_failure.end() ? "" : it->second});
  }

  // |G| = |G:H| |H|, with the index counted by coset enumeration
  std::size_t pairs = 0;
  for (const auto* e : select(corpus, o)) {
    if (pairs >= 20) break;
    const FiniteGroup& G = e->group;
    if (G.is_trivial()) continue;
    std::vector<std::pair<std::string, FiniteGroup>> subs;
    for (auto p : prime_divisors(G.order())) subs.emplace_back("Sylow " + std::to_string(p), sylow_subgroup(G, p, o.seed));
    subs.emplace_back("centre", center(G));
    for (const auto& [label, H] : subs) {
      if (pairs >= 20) break;
      ++pairs;
      const Supernatural lhs = Supernatural::from_integer(G.order());
      const Supernatural rhs =
          multiply(Supernatural::from_integer(count_cosets(G, H)), Supernatural::from_integer(H.order()));
      r.cases.push_back({e->name + " " + label + " |G| = |G:H||H|", lhs == rhs, lhs.to_string() + " = " + rhs.to_string()});
    }
  }
  r.cases.push_back({"20 (G, H) factorisation pairs", pairs == 20, std::to_string(pairs) + " pairs"});
}

// ---- 9 ----
void tower_degeneracy(const Corpus&, const SuiteOptions&, SuiteReport& r) {
  const std::uint64_t primes[] = {2, 3, 2, 3};
  Tower t = build_degenerate_tower(primes, 4);
  for (std::size_t i = 1; i <= 4; ++i) {
    FiniteGroup F = fitting_subgroup(t.level(i));
    const bool pass = is_p_group(F, primes[i - 1]) && !F.is_trivial();
    r.cases.push_back({"(2,3,2,3) F(G_" + std::to_string(i) + ") is a " + std::to_string(primes[i - 1]) + "-group",
                       pass, "|G_i| = " + std::to_string(t.level(i).order()) + ", |F| = " + std::to_string(F.order())});
  }
  auto cert = fd_certificate(t, 4);
  for (std::size_t i = 0; i < cert.stable_images.size(); ++i)
    r.cases.push_back({"(2,3,2,3) depth 4 stable F* image at level " + std::to_string(i + 1) + " is trivial",
                       cert.trivial[i], describe(cert.stable_images[i])});
  r.cases.push_back({"(2,3,2,3) certificate at depth 4 valid", cert.valid(), ""});
  for (std::size_t J = 1; J < 4; ++J)
    r.cases.push_back({"(2,3,2,3) order at depth " + std::to_string(J) + " divides order at depth " + std::to_string(J + 1),
                       divides(tower_order(t, J), tower_order(t, J + 1)), tower_order(t, J + 1).to_string()});

  const std::uint64_t distinct[] = {2, 3, 5};
  Tower u = build_degenerate_tower(distinct, 3);
  for (std::size_t i = 1; i <= 3; ++i)
    for (auto p : prime_divisors(u.level(i).order())) {
      FiniteGroup S = sylow_subgroup(u.level(i), p);
      r.cases.push_back({"(2,3,5) G_" + std::to_string(i) + " Sylow " + std::to_string(p) + " elementary abelian",
                         is_elementary_abelian(S), ok_order(S)});
    }
  r.cases.push_back({"(2,3,5) certificate at depth 3 valid", fd_certificate(u, 3).valid(), ""});
  r.notes.push_back("a valid certificate shows the stable F* images below depth J are trivial; "
                    "it is a sufficient condition at finite depth, not a decision about the limit");
}

// ---- 10 ----
void theorem_d(const Corpus&, const SuiteOptions&, SuiteReport& r) {
  const std::uint64_t primes[] = {2, 3, 2, 3};
  Tower t = build_degenerate_tower(primes, 4);
  WitnessSearch s(t);
  for (std::size_t i = 1; i <= 2; ++i)
    for (const auto& x : t.level(i).elements()) {
      if (x.is_identity()) continue;
      auto w = s.find({i, x}, 4);
      std::string detail = w ? "j=" + std::to_string(w->level) + ", |K|=" + std::to_string(w->kernel.order()) +
                                   ", |G_j/K|=" + std::to_string(w->quotient_order) +
                                   ", |F*(G_j/K)|=" + std::to_string(w->fstar_order)
                             : "no witness at depth 4";
      r.cases.push_back({"(2,3,2,3) G_" + std::to_string(i) + " " + x.to_string(), w.has_value(), detail});
    }
  Tower c = constant_tower(FiniteGroup({Permutation::parse("(1 2)", 4), Permutation::parse("(1 2 3 4)", 4)}), 4);
  WitnessSearch sc(c);
  const FiniteGroup v4({Permutation::parse("(1 2)(3 4)", 4), Permutation::parse("(1 3)(2 4)", 4)});
  for (const auto& x : v4.elements()) {
    if (x.is_identity()) continue;
    auto w = sc.find({1, x}, 4);
    r.cases.push_back({"constant S4 tower " + x.to_string() + " has no witness", !w.has_value(),
                       w ? "unexpected witness at j=" + std::to_string(w->level) : ""});
  }
  r.notes.push_back("no witness at depth J does not show the limit is not Fitting-degenerate");
}

using SuiteFn = std::function<void(const Corpus&, const SuiteOptions&, SuiteReport&)>;

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r = {
      {"theoremB", theorem_b},   {"oracleFstar", oracle_fstar},   {"centralProduct", central_product},
      {"minimalNormal", minimal_normal}, {"prop34", prop34},      {"sylowHall", sylow_hall},
      {"tate", tate},            {"cor213", cor213},              {"towerDegeneracy", tower_degeneracy},
      {"theoremD", theorem_d},   {"supernatural", supernatural}};
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [n, f] : registry()) v.push_back(n);
    return v;
  }();
  return names;
}

bool is_suite(const std::string& name) {
  const auto& n = suite_names();
  return std::find(n.begin(), n.end(), name) != n.end();
}

SuiteReport run_suite(const std::string& name, const std::vector<CorpusEntry>& corpus, const SuiteOptions& opts) {
  for (const auto& [n, fn] : registry())
    if (n == name) {
      SuiteReport r;
      r.suite = name;
      r.seed = opts.seed;
      Corpus all = corpus;
      if (opts.random_k > 0 && name != "theoremB")
        for (auto& e : random_groups(opts.random_k, opts.random_n, opts.seed)) all.push_back(std::move(e));
      fn(all, opts, r);
      return r;
    }
  throw DomainError("unknown suite '" + name + "'");
}

}  // namespace fitkit::cli
