#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "fitkit/permutation.hpp"

namespace fitkit {

/// Base and strong generating set built by deterministic Schreier-Sims.
///
/// New base points are always the smallest point moved by the element
/// that forces the extension, and input generators are processed in
/// order, so the chain depends only on the input sequence.
class StabChain {
 public:
  struct Level {
    Point base = 0;
    std::vector<Permutation> gens;          // generators of the level group
    std::vector<Point> orbit;               // orbit of `base`, discovery order
    std::vector<std::int32_t> position;     // point -> index in orbit, -1 if absent
    std::vector<Permutation> transversal;   // base^u = orbit[k]
    std::vector<Permutation> inverse_transversal;
    std::size_t tested_orbit = 0;           // Schreier generators verified for
    std::size_t tested_gens = 0;            // the leading rectangle
  };

  explicit StabChain(std::size_t degree);
  StabChain(std::size_t degree, std::span<const Permutation> gens);
  /// Chain whose first levels use `base_prefix` in order (levels with a
  /// trivial orbit are kept), so the group at level k fixes the first k
  /// prefix points pointwise.
  StabChain(std::size_t degree, std::span<const Permutation> gens, std::span<const Point> base_prefix);

  /// Adds `g` to the group. Returns false when `g` was already a member.
  bool extend(const Permutation& g);

  std::size_t degree() const noexcept { return degree_; }
  Order order() const noexcept { return order_; }
  const std::vector<Level>& levels() const noexcept { return levels_; }
  std::vector<Point> base() const;

  bool contains(const Permutation& g) const;

  struct SiftResult {
    Permutation residue;
    std::size_t level;  // first level where sifting stopped, levels().size() if none
  };
  SiftResult sift(Permutation g, std::size_t from = 0) const;

  /// Uniformly random element.
  Permutation random_element(std::mt19937_64& rng) const;

  /// Calls f on every element (unspecified but deterministic order).
  template <class F>
  void for_each_element(F&& f) const {
    Permutation acc(degree_);
    walk(levels_.size(), acc, f);
  }

 private:
  template <class F>
  void walk(std::size_t depth, const Permutation& acc, F& f) const {
    if (depth == 0) {
      f(acc);
      return;
    }
    const Level& L = levels_[depth - 1];
    for (const auto& u : L.transversal) walk(depth - 1, acc * u, f);
  }

  void add_to_level(std::size_t l, const Permutation& g);
  void complete(std::size_t start);
  void recompute_order();

  std::size_t degree_;
  std::vector<Level> levels_;
  Order order_ = 1;
};

}  // namespace fitkit
