#include "fitkit/lattice.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <unordered_map>

#include "fitkit/caps.hpp"
#include "fitkit/element_table.hpp"
#include "fitkit/errors.hpp"
#include "fitkit/numtheory.hpp"
#include "fitkit/perm_core.hpp"

namespace fitkit {

namespace {

// Deduplicating store of table subgroups.
class SubgroupSet {
 public:
  bool insert(TableSubgroup s) {
    auto [it, fresh] = index_.emplace(s.elements, items_.size());
    if (fresh) items_.push_back(std::move(s));
    return fresh;
  }
  std::vector<TableSubgroup>& items() { return items_; }

 private:
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> index_;
  std::vector<TableSubgroup> items_;
};

void sort_table(std::vector<TableSubgroup>& v) {
  std::sort(v.begin(), v.end(),
            [](const TableSubgroup& a, const TableSubgroup& b) { return canonical_less(a.elements, b.elements); });
}

template <class T, class Key>
void sort_by_group(std::vector<T>& v, Key key) {
  std::vector<std::pair<std::vector<Permutation>, std::size_t>> keys;
  keys.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) keys.emplace_back(key(v[i]).elements(), i);
  std::sort(keys.begin(), keys.end(), [](const auto& x, const auto& y) {
    if (x.first.size() != y.first.size()) return x.first.size() < y.first.size();
    return x.first < y.first;
  });
  std::vector<T> out;
  out.reserve(v.size());
  for (const auto& k : keys) out.push_back(v[k.second]);
  v = std::move(out);
}

std::vector<FiniteGroup> class_closures(const FiniteGroup& G) {
  auto cc = conjugacy_classes(G);
  std::vector<FiniteGroup> out;
  for (const auto& rep : cc.representatives) {
    if (rep.is_identity()) continue;
    const Permutation x[] = {rep};
    FiniteGroup N = normal_closure(G, x);
    if (std::none_of(out.begin(), out.end(), [&](const FiniteGroup& M) { return M == N; }))
      out.push_back(std::move(N));
  }
  return out;
}

// Complements of the abelian minimal normal subgroup N. Each complement
// meets every coset g*N in exactly one element, so it is found by choosing
// lifts n_i for a generating set of G/N and keeping tuples whose partial
// groups map isomorphically.
std::vector<FiniteGroup> complements(const FiniteGroup& G, const FiniteGroup& N, const Quotient& q) {
  const auto& gens = G.generators();
  const auto& imgs = q.projection.generator_images();
  std::vector<std::size_t> pick;
  std::vector<Order> target;
  StabChain qc(q.group.degree());
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (qc.extend(imgs[i])) {
      pick.push_back(i);
      target.push_back(qc.order());
    }
  const auto nel = N.elements();
  std::vector<FiniteGroup> found;
  std::vector<Permutation> chosen;
  std::uint64_t visited = 0;
  std::function<void(std::size_t)> search = [&](std::size_t d) {
    if (d == pick.size()) {
      found.emplace_back(chosen, G.degree());
      return;
    }
    for (const auto& n : nel) {
      if (++visited > caps().elements) throw CapExceeded("elements", caps().elements, visited);
      chosen.push_back(gens[pick[d]] * n);
      StabChain c(G.degree(), chosen);
      if (c.order() == target[d]) search(d + 1);
      chosen.pop_back();
    }
  };
  search(0);
  return found;
}

}  // namespace

NormalLattice normal_subgroups(const FiniteGroup& G) {
  ElementTable T(G, caps().normal_lattice, "normal_lattice");
  const TableSubgroup whole = T.whole();
  SubgroupSet atoms;
  for (const auto& cls : T.classes(whole))
    if (cls.front() != 0) atoms.insert(T.closure(cls));

  // every normal subgroup is a join of normal closures of its elements
  SubgroupSet members;
  members.insert(T.trivial());
  for (std::size_t i = 0; i < members.items().size(); ++i)
    for (const auto& a : atoms.items()) {
      const TableSubgroup& m = members.items()[i];
      if (a.elements.subset_of(m.elements)) continue;
      members.insert(T.join(m, a));
    }
  auto& items = members.items();
  sort_table(items);
  NormalLattice out{G, {}};
  for (const auto& m : items) out.members.push_back(T.to_group(m));
  return out;
}

std::vector<FiniteGroup> minimal_normal_subgroups(const FiniteGroup& G) {
  if (G.is_trivial()) throw DomainError("minimal_normal_subgroups: trivial group");
  auto closures = class_closures(G);
  std::vector<FiniteGroup> out;
  for (const auto& N : closures) {
    bool minimal = std::none_of(closures.begin(), closures.end(), [&](const FiniteGroup& M) {
      return M.order() < N.order() && N.contains(M);
    });
    if (minimal) out.push_back(N);
  }
  sort_canonical(out);
  return out;
}

FiniteGroup socle(const FiniteGroup& G) {
  if (G.is_trivial()) return G;
  return join(minimal_normal_subgroups(G), G.degree());
}

bool is_simple(const FiniteGroup& G) {
  if (G.is_trivial()) return false;
  if (is_abelian(G)) return is_prime(G.order());
  auto cc = conjugacy_classes(G);
  for (const auto& rep : cc.representatives) {
    if (rep.is_identity()) continue;
    const Permutation x[] = {rep};
    if (normal_closure(G, x).order() != G.order()) return false;
  }
  return true;
}

SubgroupInventory all_subgroups(const FiniteGroup& G) {
  ElementTable T(G, caps().subgroups, "subgroups");
  SubgroupSet cyclic;
  for (ElementIndex x = 1; x < T.size(); ++x) {
    const ElementIndex g[] = {x};
    cyclic.insert(T.closure(g));
  }
  SubgroupSet subs;
  subs.insert(T.trivial());
  for (std::size_t i = 0; i < subs.items().size(); ++i)
    for (const auto& c : cyclic.items()) {
      const TableSubgroup& s = subs.items()[i];
      if (c.elements.subset_of(s.elements)) continue;
      subs.insert(T.join(s, c));
    }
  auto& items = subs.items();
  sort_table(items);

  SubgroupInventory inv{G, {}, {}};
  const std::size_t n = items.size();
  inv.maximal_flags.assign(n, false);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    bool maximal = true;
    for (std::size_t j = i + 1; j + 1 < n && maximal; ++j)
      if (items[j].order() > items[i].order() && items[i].elements.subset_of(items[j].elements)) maximal = false;
    inv.maximal_flags[i] = maximal;
  }
  for (const auto& s : items) inv.subgroups.push_back(T.to_group(s));
  return inv;
}

FiniteGroup core(const FiniteGroup& G, const FiniteGroup& H) {
  require_subgroup(G, H, "core");
  FiniteGroup K = H;
  // each round strictly shrinks K while it is not normal
  while (!is_normal_in(G, K))
    for (const auto& g : G.generators()) K = intersection(K, conjugate_subgroup(K, g));
  return K;
}

std::vector<FiniteGroup> maximal_subgroups(const FiniteGroup& G) {
  auto inv = all_subgroups(G);
  std::vector<FiniteGroup> out;
  for (std::size_t i = 0; i < inv.subgroups.size(); ++i)
    if (inv.maximal_flags[i]) out.push_back(inv.subgroups[i]);
  return out;
}

std::vector<MaximalWithCore> maximal_subgroups_by_core(const FiniteGroup& G) {
  std::vector<MaximalWithCore> out;
  if (G.is_trivial()) return out;
  auto add = [&](FiniteGroup M, FiniteGroup C) {
    for (const auto& e : out)
      if (e.core == C) return;
    out.push_back({std::move(M), std::move(C)});
  };

  if (G.order() <= caps().subgroups) {
    for (auto& M : maximal_subgroups(G)) {
      FiniteGroup C = core(G, M);
      add(std::move(M), std::move(C));
    }
  } else {
    auto mins = minimal_normal_subgroups(G);
    auto it = std::find_if(mins.begin(), mins.end(), [](const FiniteGroup& N) { return is_abelian(N); });
    if (it == mins.end()) throw CapExceeded("subgroups", caps().subgroups, G.order());
    const FiniteGroup N = *it;
    Quotient q = quotient_with_projection(G, N);
    for (const auto& mc : maximal_subgroups_by_core(q.group))
      add(q.projection.preimage(mc.subgroup), q.projection.preimage(mc.core));
    for (auto& M : complements(G, N, q)) {
      FiniteGroup C = core(G, M);
      add(std::move(M), std::move(C));
    }
  }
  sort_by_group(out, [](const MaximalWithCore& m) -> const FiniteGroup& { return m.core; });
  return out;
}

FiniteGroup frattini(const FiniteGroup& G) {
  if (G.is_trivial()) return G;
  FiniteGroup phi = G;
  for (const auto& mc : maximal_subgroups_by_core(G)) phi = intersection(phi, mc.core);
  return phi;
}

Primitivity is_primitive(const FiniteGroup& G) {
  for (const auto& mc : maximal_subgroups_by_core(G))
    if (mc.core.is_trivial()) return {true, mc.subgroup};
  return {false, std::nullopt};
}

std::vector<FiniteGroup> primitive_quotient_kernels(const FiniteGroup& G) {
  std::vector<FiniteGroup> out;
  for (const auto& mc : maximal_subgroups_by_core(G)) out.push_back(mc.core);
  return out;
}

std::optional<FiniteGroup> hall_subgroup(const FiniteGroup& G, std::span<const std::uint64_t> pi,
                                         std::uint64_t seed) {
  for (auto p : pi)
    if (!is_prime(p)) throw DomainError("hall_subgroup: " + std::to_string(p) + " is not prime");
  std::vector<std::uint64_t> present;
  Order part = 1;
  for (auto p : prime_divisors(G.order()))
    if (std::find(pi.begin(), pi.end(), p) != pi.end()) {
      present.push_back(p);
      part *= p_part(G.order(), p);
    }
  if (part == 1) return FiniteGroup::trivial(G.degree());
  if (part == G.order()) return G;
  if (present.size() == 1) return sylow_subgroup(G, present.front(), seed);

  auto inv = all_subgroups(G);
  std::vector<const FiniteGroup*> hits;
  for (const auto& H : inv.subgroups)
    if (H.order() == part) hits.push_back(&H);
  if (hits.empty()) return std::nullopt;
  const FiniteGroup& H = *hits[seed % hits.size()];
  const Order index = G.order() / H.order();
  for (auto p : present)
    if (index % p == 0) throw InternalError("hall_subgroup: index is not a pi'-number");
  return H;
}

}  // namespace fitkit
