#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fitkit/group.hpp"
#include "fitkit/homomorphism.hpp"
#include "fitkit/supernatural.hpp"

namespace fitkit {

struct TowerCheck {
  bool valid = false;
  std::size_t level = 0;  // 1-based level of the first bad projection, 0 when valid
  std::string reason;
};

/// Inverse system G_1 <- G_2 <- ... <- G_n. Levels are 1-based throughout.
/// projection_images[i-1] are the images in G_i of the generators of
/// G_{i+1}. The constructor checks every projection once and keeps the
/// verdict; projection() on an invalid level throws DomainError.
class Tower {
 public:
  Tower(std::vector<FiniteGroup> levels, std::vector<std::vector<Permutation>> projection_images,
        std::vector<std::uint64_t> primes = {});

  std::size_t depth() const noexcept { return levels_.size(); }
  const FiniteGroup& level(std::size_t i) const;
  const std::vector<Permutation>& projection_images(std::size_t i) const;
  /// pi_i : G_{i+1} -> G_i, for 1 <= i < depth().
  const Homomorphism& projection(std::size_t i) const;
  /// Empty unless built by build_degenerate_tower (or read with primes).
  const std::vector<std::uint64_t>& primes() const noexcept { return primes_; }
  const TowerCheck& check() const noexcept { return check_; }

  /// Image of an element or subgroup of G_from in G_to (from >= to).
  Permutation project(const Permutation& x, std::size_t from, std::size_t to) const;
  FiniteGroup project(const FiniteGroup& H, std::size_t from, std::size_t to) const;
  /// Some element of G_to (to >= from) projecting onto x.
  Permutation lift(const Permutation& x, std::size_t from, std::size_t to) const;
  /// Kernel of the composite G_j -> G_i.
  FiniteGroup kernel(std::size_t j, std::size_t i) const;

  /// Same degrees, generator lists, projection images and primes.
  friend bool operator==(const Tower& a, const Tower& b);

 private:
  void require_level(std::size_t i, const char* what) const;

  std::vector<FiniteGroup> levels_;
  std::vector<std::vector<Permutation>> images_;
  std::vector<std::uint64_t> primes_;
  std::vector<std::shared_ptr<const Homomorphism>> homs_;
  TowerCheck check_;
};

/// G <- G <- ... <- G with identity maps.
Tower constant_tower(const FiniteGroup& G, std::size_t levels);

TowerCheck tower_validate(const Tower& t);

enum class Invariant { Fitting, Layer, Fstar };
FiniteGroup invariant_of(const FiniteGroup& G, Invariant inv);

/// Inv(G_i) intersected with the images of Inv(G_j) for i < j <= J.
FiniteGroup stable_image(const Tower& t, std::size_t i, Invariant inv, std::size_t J);

struct DegeneracyCertificate {
  std::size_t depth = 0;
  std::vector<FiniteGroup> stable_images;  // levels 1 .. depth-1
  std::vector<bool> trivial;
  /// All stable F* images below depth are trivial. This is sufficient at
  /// depth J only; it does not decide anything about the limit.
  bool valid() const;
};
DegeneracyCertificate fd_certificate(const Tower& t, std::size_t J);

struct TowerElement {
  std::size_t level = 1;
  Permutation element;
};

struct Witness {
  std::size_t level = 0;     // j
  FiniteGroup kernel;        // K, normal in G_j, G_j/K primitive
  FiniteGroup maximal;       // maximal subgroup of G_j with core K
  Permutation lift;          // lift of x to G_j
  Order quotient_order = 0;  // |G_j/K|
  Order fstar_order = 0;     // |F*(G_j/K)|
};

/// First (j, K) with G_j/K primitive and the image of x outside F*(G_j/K),
/// scanning j = x.level .. J and kernels in lattice order. Each hit is
/// re-checked through the regular quotient and a second lift; InternalError
/// if that disagrees. DomainError for trivial x.
///
/// Per-level kernel data is cached, so reuse one search for many elements.
class WitnessSearch {
 public:
  explicit WitnessSearch(const Tower& t);
  ~WitnessSearch();
  WitnessSearch(const WitnessSearch&) = delete;
  WitnessSearch& operator=(const WitnessSearch&) = delete;

  std::optional<Witness> find(const TowerElement& x, std::size_t J);

 private:
  struct Level;
  const Level& level_data(std::size_t j);

  const Tower& tower_;
  std::vector<std::unique_ptr<Level>> cache_;
};

std::optional<Witness> theorem_d_witness(const Tower& t, const TowerElement& x, std::size_t J);

struct FaithfulAction {
  std::size_t degree = 0;
  Homomorphism action;     // G -> Sym(degree), injective
  FiniteGroup stabilizer;  // core-free subgroup whose cosets are permuted
};
/// Coset action on a largest core-free subgroup from the inventory. Above
/// caps().subgroups: the stabiliser of a point when G is transitive on its
/// moved points, else the regular action.
FaithfulAction minimal_faithful_degree(const FiniteGroup& G);

/// G_1 = C_{p_1}; G_{i+1} = V ⋊ G_i with V elementary abelian over
/// p_{i+1}. V is the permutation module on cosets of a core-free subgroup
/// H when p^n |G_i| fits the tower cap; otherwise, for odd p, the monomial
/// module induced from a character of <H, g> with g normalising H.
/// F(G_{i+1}) = V is checked per level (InternalError on failure).
Tower build_degenerate_tower(std::span<const std::uint64_t> primes, std::size_t levels);

/// lcm of |G_j| for j <= J.
Supernatural tower_order(const Tower& t, std::size_t J);

std::string tower_to_json(const Tower& t);
/// ParseError on malformed documents.
Tower tower_from_json(std::string_view text);

}  // namespace fitkit
