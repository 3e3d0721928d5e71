#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "fitkit/group.hpp"

namespace fitkit {

/// Largest normal subgroup whose order involves only primes in `pi`.
/// A single prime goes through the core of a Sylow subgroup; several
/// primes need the normal lattice (CapExceeded above its cap).
FiniteGroup o_pi(const FiniteGroup& G, std::span<const std::uint64_t> pi);
FiniteGroup o_p(const FiniteGroup& G, std::uint64_t p);

/// Join of the O_p(G).
FiniteGroup fitting_subgroup(const FiniteGroup& G);

/// Perfect, and G/Z(G) simple.
bool is_quasisimple(const FiniteGroup& G);

/// All components, in canonical order. Found through H = C_G(F)/Z(F),
/// which is isomorphic to C_G(F)F/F: the simple factors of the minimal
/// normal subgroups of H pull back to subgroups whose perfect residuals are
/// the components. Each result is checked quasisimple and subnormal;
/// InternalError otherwise.
std::vector<FiniteGroup> components(const FiniteGroup& G);
FiniteGroup layer(const FiniteGroup& G);

struct FittingReport {
  FiniteGroup group;
  FiniteGroup fitting;
  std::vector<FiniteGroup> components;
  FiniteGroup layer;
  FiniteGroup fstar;
  FiniteGroup center_of_fitting;
  FiniteGroup centralizer_of_fstar;
};
FittingReport generalized_fitting(const FiniteGroup& G);

/// G = F*(G). Also tests "G/F(G) perfect and G/E(G) nilpotent" and throws
/// InternalError if the two answers differ.
bool is_fstar_group(const FiniteGroup& G);

/// Last term of the lower central series.
FiniteGroup nilpotent_residual(const FiniteGroup& G);

/// Rank of S/Phi(S) for a Sylow p-subgroup S; 0 when p does not divide |G|.
unsigned d_p(const FiniteGroup& G, std::uint64_t p);

struct LowerRSeries {
  FiniteGroup group;
  std::uint64_t r = 1;
  std::vector<FiniteGroup> terms;  // terms[0] = G, strictly decreasing
  FiniteGroup stable;

  /// Term k, constant once the series has stopped.
  const FiniteGroup& term(std::size_t k) const { return terms[std::min(k, terms.size() - 1)]; }
};
/// Phi^{k+1} = [Phi^k, G] (Phi^k)^r, iterated until it stops.
LowerRSeries lower_r_series(const FiniteGroup& G, std::uint64_t r);

struct HypothesisCheck {
  bool hypothesis_holds = false;
  bool conclusion_holds = false;
};

/// Hypothesis: |G:H| coprime to r and Phi^1_r(H) = Phi^1_r(G) ∩ H.
/// Conclusion: Phi^k_r(H) = Phi^k_r(G) ∩ H for every k.
HypothesisCheck tate_verify(const FiniteGroup& G, const FiniteGroup& H, std::uint64_t r);

/// Hypothesis: S ∩ N <= Phi(S) for a Sylow p-subgroup S of G.
/// Conclusion: Phi^inf_p(N) is normal in N of order the p'-part of |N|.
HypothesisCheck cor213_verify(const FiniteGroup& G, const FiniteGroup& N, std::uint64_t p);

struct TheoremBCheck {
  FiniteGroup lhs;  // C_G(F*(G))
  FiniteGroup rhs;  // Z(F(G))
  bool equal = false;
};
TheoremBCheck theorem_b_verify(const FiniteGroup& G);

/// Joins of subnormal subgroups by exhaustive enumeration on an element
/// table. Shares no code with generalized_fitting beyond the table.
struct OracleJoins {
  FiniteGroup nilpotent;    // subnormal nilpotent subgroups
  FiniteGroup quasisimple;  // subnormal quasisimple subgroups
  FiniteGroup fstar;        // both
};
/// |G| must be within caps().oracle.
OracleJoins brute_force_joins(const FiniteGroup& G);
FiniteGroup brute_force_fstar_oracle(const FiniteGroup& G);

}  // namespace fitkit
