#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "fitkit/group.hpp"
#include "fitkit/homomorphism.hpp"

namespace fitkit {

/// Group generated by `gens`; the empty list gives the trivial group of
/// degree 1.
FiniteGroup group_from_generators(std::vector<Permutation> gens);

// ---- subgroups built from G -------------------------------------------------

/// Smallest normal subgroup of G containing X. DomainError if X is not in G.
FiniteGroup normal_closure(const FiniteGroup& G, std::span<const Permutation> X);
FiniteGroup normal_closure(const FiniteGroup& G, const FiniteGroup& H);

/// [A, B] for subgroups A, B normalised by G: the normal closure in G of
/// the commutators of their generators.
FiniteGroup commutator_subgroup(const FiniteGroup& G, const FiniteGroup& A, const FiniteGroup& B);
FiniteGroup derived_subgroup(const FiniteGroup& G);

struct DerivedData {
  std::vector<FiniteGroup> series;  // series[0] = G, series[k+1] = series[k]'
  FiniteGroup terminal;             // first repeated term; perfect
};
DerivedData derived_series(const FiniteGroup& G);
FiniteGroup perfect_residual(const FiniteGroup& G);

/// <h^r : h in H>. DomainError when r = 0 or H is not a subgroup of G.
FiniteGroup power_subgroup(const FiniteGroup& G, const FiniteGroup& H, std::uint64_t r);

struct SubnormalResult {
  bool subnormal = false;
  std::optional<unsigned> defect;
};
/// Walks G >= H^G >= H^(H^G) >= ... until it stops; H is subnormal iff
/// the walk ends at H.
SubnormalResult is_subnormal(const FiniteGroup& G, const FiniteGroup& H);

FiniteGroup centralizer(const FiniteGroup& G, const FiniteGroup& H);
/// C_G(X) for arbitrary permutations of G's degree.
FiniteGroup centralizer_of(const FiniteGroup& G, std::span<const Permutation> X);
FiniteGroup center(const FiniteGroup& G);
FiniteGroup normalizer(const FiniteGroup& G, const FiniteGroup& H);
FiniteGroup intersection(const FiniteGroup& A, const FiniteGroup& B);
/// H^g = g^-1 H g.
FiniteGroup conjugate_subgroup(const FiniteGroup& H, const Permutation& g);
/// Stabiliser of `point` (0-based) in G.
FiniteGroup point_stabilizer(const FiniteGroup& G, Point point);

struct ConjugacyClasses {
  std::vector<Permutation> representatives;  // smallest element of each class, ascending
  std::vector<Order> sizes;
};
ConjugacyClasses conjugacy_classes(const FiniteGroup& G);

/// Sylow p-subgroup. The seed drives the random growth steps; equal seeds
/// give equal results.
FiniteGroup sylow_subgroup(const FiniteGroup& G, std::uint64_t p, std::uint64_t seed = 0);

/// True iff some element of G conjugates A onto B. Exhaustive; bounded by
/// caps().elements.
bool are_conjugate(const FiniteGroup& G, const FiniteGroup& A, const FiniteGroup& B);

// ---- actions and quotients -------------------------------------------------

/// Action of G on the right cosets H*g, as a homomorphism onto its image
/// in Sym([G:H]). Coset 1 is H itself.
Homomorphism coset_action(const FiniteGroup& G, const FiniteGroup& H);

/// Representatives of the right cosets H*g, numbered as in coset_action.
std::vector<Permutation> right_coset_representatives(const FiniteGroup& G, const FiniteGroup& H);

/// Number of right cosets of H in G, counted by orbit enumeration.
Order count_cosets(const FiniteGroup& G, const FiniteGroup& H);

struct Quotient {
  FiniteGroup group;
  Homomorphism projection;
};
/// G/N on the right cosets of N. DomainError unless N is normal in G.
Quotient quotient_with_projection(const FiniteGroup& G, const FiniteGroup& N);

// ---- predicates --------------------------------------------------------------

struct StructurePredicates {
  bool is_nilpotent = false;
  bool is_soluble = false;
  bool is_perfect = false;
  Order exponent = 1;
};
StructurePredicates structure_predicates(const FiniteGroup& G);

bool is_abelian(const FiniteGroup& G);
bool is_perfect(const FiniteGroup& G);
bool is_soluble(const FiniteGroup& G);
/// Every Sylow subgroup normal.
bool is_nilpotent(const FiniteGroup& G);
Order exponent(const FiniteGroup& G);
bool is_p_group(const FiniteGroup& G, std::uint64_t p);
bool is_elementary_abelian(const FiniteGroup& G);

/// Listing order for subgroups of a common group: order first, then the
/// ascending element lists lexicographically.
bool canonical_less(const FiniteGroup& a, const FiniteGroup& b);
void sort_canonical(std::vector<FiniteGroup>& groups);

/// Unordered 64-bit fingerprint of the element set (for orbit hashing).
std::uint64_t element_set_hash(const FiniteGroup& H);

}  // namespace fitkit
