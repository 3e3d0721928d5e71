#include "fitkit/stab_chain.hpp"

#include "fitkit/errors.hpp"

namespace fitkit {

StabChain::StabChain(std::size_t degree) : degree_(degree == 0 ? 1 : degree) {}

StabChain::StabChain(std::size_t degree, std::span<const Permutation> gens) : StabChain(degree) {
  for (const auto& g : gens) extend(g);
}

StabChain::StabChain(std::size_t degree, std::span<const Permutation> gens,
                     std::span<const Point> base_prefix)
    : StabChain(degree) {
  for (Point b : base_prefix) {
    if (b >= degree_) throw DomainError("base point outside the permutation domain");
    Level L;
    L.base = b;
    L.position.assign(degree_, -1);
    L.position[b] = 0;
    L.orbit.push_back(b);
    L.transversal.emplace_back(degree_);
    L.inverse_transversal.emplace_back(degree_);
    levels_.push_back(std::move(L));
  }
  for (const auto& g : gens) extend(g);
}

std::vector<Point> StabChain::base() const {
  std::vector<Point> b;
  b.reserve(levels_.size());
  for (const auto& L : levels_) b.push_back(L.base);
  return b;
}

StabChain::SiftResult StabChain::sift(Permutation g, std::size_t from) const {
  for (std::size_t l = from; l < levels_.size(); ++l) {
    const Level& L = levels_[l];
    const std::int32_t pos = L.position[g[L.base]];
    if (pos < 0) return {std::move(g), l};
    g *= L.inverse_transversal[static_cast<std::size_t>(pos)];
  }
  return {std::move(g), levels_.size()};
}

bool StabChain::contains(const Permutation& g) const {
  if (g.degree() != degree_)
    throw DomainError("membership test: degree " + std::to_string(g.degree()) + " vs group degree " +
                      std::to_string(degree_));
  return sift(g).residue.is_identity();
}

bool StabChain::extend(const Permutation& g) {
  if (g.degree() != degree_)
    throw DomainError("generator degree " + std::to_string(g.degree()) + " differs from " +
                      std::to_string(degree_));
  auto [h, j] = sift(g);
  if (h.is_identity()) return false;
  for (std::size_t l = 0; l <= j; ++l) add_to_level(l, h);
  complete(j);
  recompute_order();
  return true;
}

void StabChain::add_to_level(std::size_t l, const Permutation& g) {
  if (l == levels_.size()) {
    Level L;
    L.base = *g.smallest_moved_point();
    L.position.assign(degree_, -1);
    L.position[L.base] = 0;
    L.orbit.push_back(L.base);
    L.transversal.emplace_back(degree_);
    L.inverse_transversal.emplace_back(degree_);
    levels_.push_back(std::move(L));
  }
  Level& L = levels_[l];
  L.gens.push_back(g);
  auto add_point = [&L](Point gamma, Permutation u) {
    L.position[gamma] = static_cast<std::int32_t>(L.orbit.size());
    L.orbit.push_back(gamma);
    L.inverse_transversal.push_back(u.inverse());
    L.transversal.push_back(std::move(u));
  };
  const std::size_t old_size = L.orbit.size();
  for (std::size_t k = 0; k < old_size; ++k) {
    Point gamma = g[L.orbit[k]];
    if (L.position[gamma] < 0) add_point(gamma, L.transversal[k] * g);
  }
  for (std::size_t k = old_size; k < L.orbit.size(); ++k) {
    for (const auto& s : L.gens) {
      Point gamma = s[L.orbit[k]];
      if (L.position[gamma] < 0) add_point(gamma, L.transversal[k] * s);
    }
  }
}

void StabChain::complete(std::size_t start) {
  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(start);
  if (i >= static_cast<std::ptrdiff_t>(levels_.size())) i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
  while (i >= 0) {
    const auto li = static_cast<std::size_t>(i);
    bool extended = false;
    const std::size_t n_orbit = levels_[li].orbit.size();
    const std::size_t n_gens = levels_[li].gens.size();
    for (std::size_t a = 0; a < n_orbit && !extended; ++a) {
      for (std::size_t b = 0; b < n_gens; ++b) {
        const Level& L = levels_[li];
        if (a < L.tested_orbit && b < L.tested_gens) continue;
        const Permutation& s = L.gens[b];
        Point image = s[L.orbit[a]];
        Permutation schreier = L.transversal[a] * s;
        schreier *= L.inverse_transversal[static_cast<std::size_t>(L.position[image])];
        if (schreier.is_identity()) continue;
        auto [h, j] = sift(std::move(schreier), li + 1);
        if (h.is_identity()) continue;
        for (std::size_t l = li + 1; l <= j; ++l) add_to_level(l, h);
        i = static_cast<std::ptrdiff_t>(j);
        extended = true;
        break;
      }
    }
    if (!extended) {
      levels_[li].tested_orbit = n_orbit;
      levels_[li].tested_gens = n_gens;
      --i;
    }
  }
}

void StabChain::recompute_order() {
  Order o = 1;
  for (const auto& L : levels_) {
    Order next;
    if (__builtin_mul_overflow(o, static_cast<Order>(L.orbit.size()), &next))
      throw CapExceeded("order-overflow", ~0ULL, ~0ULL);
    o = next;
  }
  order_ = o;
}

Permutation StabChain::random_element(std::mt19937_64& rng) const {
  Permutation acc(degree_);
  for (std::size_t l = levels_.size(); l-- > 0;) {
    const auto& T = levels_[l].transversal;
    std::uniform_int_distribution<std::size_t> pick(0, T.size() - 1);
    acc *= T[pick(rng)];
  }
  return acc;
}

}  // namespace fitkit
