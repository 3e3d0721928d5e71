#pragma once

#include <memory>
#include <random>
#include <span>
#include <vector>

#include "fitkit/permutation.hpp"
#include "fitkit/stab_chain.hpp"

namespace fitkit {

/// Immutable permutation group given by generators, with an eagerly built
/// stabiliser chain. Copies share the chain.
class FiniteGroup {
 public:
  /// Trivial group of degree 1 with no generators.
  FiniteGroup();
  /// Throws DomainError on generators of differing degree. An empty list
  /// gives the trivial group of degree `degree` (1 when 0).
  explicit FiniteGroup(std::vector<Permutation> gens, std::size_t degree = 0);

  static FiniteGroup trivial(std::size_t degree = 1);

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return gens_; }
  Order order() const noexcept { return chain_->order(); }
  bool is_trivial() const noexcept { return order() == 1; }
  const StabChain& chain() const noexcept { return *chain_; }

  bool contains(const Permutation& g) const { return chain_->contains(g); }
  bool contains_all(std::span<const Permutation> gs) const;
  /// True iff every generator of `h` lies in this group (degrees must match).
  bool contains(const FiniteGroup& h) const;

  Permutation identity() const { return Permutation(degree_); }
  Permutation random_element(std::mt19937_64& rng) const { return chain_->random_element(rng); }

  /// All elements in ascending canonical order. Throws CapExceeded above
  /// caps().elements.
  std::vector<Permutation> elements() const;

  template <class F>
  void for_each_element(F&& f) const {
    chain_->for_each_element(std::forward<F>(f));
  }

  /// Same subgroup (equal order and mutual containment).
  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b);

 private:
  std::size_t degree_;
  std::vector<Permutation> gens_;
  std::shared_ptr<const StabChain> chain_;
};

/// Group generated by `gens`, keeping only generators that enlarge the
/// group built so far. Degree is explicit so the empty list is well placed.
FiniteGroup subgroup_from(std::size_t degree, std::span<const Permutation> gens);

/// Subgroup generated by both groups.
FiniteGroup join(const FiniteGroup& a, const FiniteGroup& b);
FiniteGroup join(std::span<const FiniteGroup> groups, std::size_t degree);

/// Throws DomainError unless H <= G.
void require_subgroup(const FiniteGroup& G, const FiniteGroup& H, const char* what);

bool is_normal_in(const FiniteGroup& G, const FiniteGroup& N);

}  // namespace fitkit
