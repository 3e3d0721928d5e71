#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "fitkit/group.hpp"

namespace fitkit {

/// All normal subgroups of `ambient`, sorted by order then by element list.
struct NormalLattice {
  FiniteGroup ambient;
  std::vector<FiniteGroup> members;
};

/// Complete list; |G| must be within caps().normal_lattice.
NormalLattice normal_subgroups(const FiniteGroup& G);

/// Minimal normal subgroups in canonical order. Works from conjugacy-class
/// representatives, so the bound is caps().elements rather than the lattice
/// cap. DomainError on the trivial group.
std::vector<FiniteGroup> minimal_normal_subgroups(const FiniteGroup& G);

/// Join of the minimal normal subgroups; trivial for trivial G.
FiniteGroup socle(const FiniteGroup& G);

bool is_simple(const FiniteGroup& G);

struct SubgroupInventory {
  FiniteGroup ambient;
  std::vector<FiniteGroup> subgroups;  // canonical order
  std::vector<bool> maximal_flags;
};

/// Every subgroup, by join-closure of the cyclic subgroups. |G| must be
/// within caps().subgroups.
SubgroupInventory all_subgroups(const FiniteGroup& G);

/// Largest normal subgroup of G inside H.
FiniteGroup core(const FiniteGroup& G, const FiniteGroup& H);

/// Every maximal subgroup (inventory route, |G| <= caps().subgroups).
std::vector<FiniteGroup> maximal_subgroups(const FiniteGroup& G);

/// A maximal subgroup together with its core.
struct MaximalWithCore {
  FiniteGroup subgroup;
  FiniteGroup core;
};

/// One maximal subgroup for each distinct core, ordered by core. Small
/// groups use the inventory. Above caps().subgroups the search recurses
/// through an abelian minimal normal subgroup N: maximal subgroups either
/// contain N or complement it. Throws CapExceeded when no such N exists.
std::vector<MaximalWithCore> maximal_subgroups_by_core(const FiniteGroup& G);

FiniteGroup frattini(const FiniteGroup& G);

struct Primitivity {
  bool primitive = false;
  std::optional<FiniteGroup> witness;  // a core-free maximal subgroup
};
Primitivity is_primitive(const FiniteGroup& G);

/// Distinct cores of maximal subgroups, in canonical order.
std::vector<FiniteGroup> primitive_quotient_kernels(const FiniteGroup& G);

/// A subgroup of order the pi-part of |G|, or nothing. Sylow and trivial
/// cases are answered directly; otherwise the inventory is searched and
/// the seed picks among the matches.
std::optional<FiniteGroup> hall_subgroup(const FiniteGroup& G, std::span<const std::uint64_t> pi,
                                         std::uint64_t seed = 0);

}  // namespace fitkit
