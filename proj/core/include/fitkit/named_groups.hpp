#pragma once

#include <cstdint>

#include "fitkit/group.hpp"

namespace fitkit::groups {

FiniteGroup symmetric(std::size_t n);
FiniteGroup alternating(std::size_t n);
/// Regular cyclic group of order n (degree n; degree 1 when n = 1).
FiniteGroup cyclic(std::size_t n);
/// Dihedral group of order 2n acting on n points (n >= 3).
FiniteGroup dihedral(std::size_t n);
/// Q8 in its regular representation.
FiniteGroup quaternion8();
/// (C_p)^k acting on k disjoint p-cycles.
FiniteGroup elementary_abelian(std::uint64_t p, unsigned k);
/// Klein four-group inside Sym(4).
FiniteGroup klein_four();
/// SL(2, q), q prime, acting on the nonzero vectors of F_q^2.
FiniteGroup special_linear2(std::uint64_t q);
/// A x B on disjoint point sets.
FiniteGroup direct_product(const FiniteGroup& A, const FiniteGroup& B);
/// A wr B: imprimitive action on deg(A) * deg(B) points.
FiniteGroup wreath_product(const FiniteGroup& A, const FiniteGroup& B);

}  // namespace fitkit::groups
