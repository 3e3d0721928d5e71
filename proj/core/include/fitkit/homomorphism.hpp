#pragma once

#include <memory>
#include <vector>

#include "fitkit/group.hpp"

namespace fitkit {

/// Group homomorphism fixed by the images of the domain generators.
///
/// Construction checks that the assignment extends to a homomorphism: the
/// graph subgroup {(g, phi(g))} of Sym(domain) x Sym(codomain) must have
/// the same order as the domain.
class Homomorphism {
 public:
  Homomorphism(FiniteGroup domain, FiniteGroup codomain, std::vector<Permutation> generator_images);

  const FiniteGroup& domain() const noexcept { return domain_; }
  const FiniteGroup& codomain() const noexcept { return codomain_; }
  const std::vector<Permutation>& generator_images() const noexcept { return images_; }

  Permutation image(const Permutation& g) const;
  FiniteGroup image(const FiniteGroup& H) const;
  FiniteGroup image() const;
  bool is_surjective() const { return image().order() == codomain_.order(); }

  FiniteGroup kernel() const;
  /// Some preimage of `y`; DomainError if `y` is not in the image.
  Permutation preimage(const Permutation& y) const;
  /// Full preimage of `S`, which must lie in the image.
  FiniteGroup preimage(const FiniteGroup& S) const;

  /// `this` followed by `next` (domain -> next.codomain()).
  Homomorphism then(const Homomorphism& next) const;

  static Homomorphism identity(const FiniteGroup& G);

 private:
  struct Graphs;
  const Graphs& graphs_codomain_first() const;

  FiniteGroup domain_;
  FiniteGroup codomain_;
  std::vector<Permutation> images_;
  std::shared_ptr<StabChain> domain_first_;
  std::shared_ptr<Graphs> lazy_;
};

}  // namespace fitkit
