#pragma once

// Brute-force reference computations on explicit element sets. Test-only;
// nothing here uses stabiliser chains.

#include <algorithm>
#include <set>
#include <vector>

#include "fitkit/group.hpp"
#include "fitkit/permutation.hpp"

namespace brute {

using fitkit::Permutation;
using Set = std::set<Permutation>;

inline Set closure(const std::vector<Permutation>& gens, std::size_t n) {
  Set seen{Permutation(n)};
  std::vector<Permutation> queue{Permutation(n)};
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (const auto& g : gens) {
      Permutation x = queue[i] * g;
      if (seen.insert(x).second) queue.push_back(x);
    }
  return seen;
}

inline Set elements(const fitkit::FiniteGroup& G) { return closure(G.generators(), G.degree()); }

inline Set center(const Set& G) {
  Set z;
  for (const auto& x : G)
    if (std::all_of(G.begin(), G.end(), [&](const Permutation& g) { return x * g == g * x; })) z.insert(x);
  return z;
}

inline Set centralizer(const Set& G, const Set& H) {
  Set c;
  for (const auto& x : G)
    if (std::all_of(H.begin(), H.end(), [&](const Permutation& h) { return x * h == h * x; })) c.insert(x);
  return c;
}

// Conjugate-and-close until stable.
inline Set normal_closure(const Set& G, const std::vector<Permutation>& X, std::size_t n) {
  std::vector<Permutation> gens = X;
  for (;;) {
    Set N = closure(gens, n);
    std::vector<Permutation> more;
    for (const auto& x : N)
      for (const auto& g : G)
        if (!N.count(x.conjugate(g))) more.push_back(x.conjugate(g));
    if (more.empty()) return N;
    gens.insert(gens.end(), more.begin(), more.end());
  }
}

inline Set commutators_closure(const Set& A, const Set& B, std::size_t n) {
  std::vector<Permutation> gens;
  for (const auto& a : A)
    for (const auto& b : B) gens.push_back(fitkit::commutator(a, b));
  return closure(gens, n);
}

inline bool is_normal(const Set& G, const Set& N) {
  for (const auto& x : N)
    for (const auto& g : G)
      if (!N.count(x.conjugate(g))) return false;
  return true;
}

inline std::size_t p_part(std::size_t n, std::size_t p) {
  std::size_t r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

}  // namespace brute
