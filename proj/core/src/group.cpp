#include "fitkit/group.hpp"

#include <algorithm>
#include <string>

#include "fitkit/caps.hpp"
#include "fitkit/errors.hpp"

namespace fitkit {

FiniteGroup::FiniteGroup() : degree_(1), chain_(std::make_shared<StabChain>(1)) {}

FiniteGroup::FiniteGroup(std::vector<Permutation> gens, std::size_t degree)
    : degree_(degree), gens_(std::move(gens)) {
  if (!gens_.empty()) {
    if (degree_ == 0) degree_ = gens_.front().degree();
    for (const auto& g : gens_)
      if (g.degree() != degree_)
        throw DomainError("generator degrees differ: " + std::to_string(g.degree()) + " vs " +
                          std::to_string(degree_));
  }
  if (degree_ == 0) degree_ = 1;
  chain_ = std::make_shared<StabChain>(degree_, gens_);
}

FiniteGroup FiniteGroup::trivial(std::size_t degree) { return FiniteGroup({}, degree); }

bool FiniteGroup::contains_all(std::span<const Permutation> gs) const {
  return std::all_of(gs.begin(), gs.end(), [this](const Permutation& g) { return contains(g); });
}

bool FiniteGroup::contains(const FiniteGroup& h) const {
  if (h.degree() != degree_) return false;
  return contains_all(h.generators());
}

std::vector<Permutation> FiniteGroup::elements() const {
  if (order() > caps().elements) throw CapExceeded("elements", caps().elements, order());
  std::vector<Permutation> out;
  out.reserve(order());
  for_each_element([&](const Permutation& p) { out.push_back(p); });
  std::sort(out.begin(), out.end());
  return out;
}

bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
  return a.degree() == b.degree() && a.order() == b.order() && a.contains(b);
}

FiniteGroup subgroup_from(std::size_t degree, std::span<const Permutation> gens) {
  StabChain chain(degree);
  std::vector<Permutation> kept;
  for (const auto& g : gens)
    if (chain.extend(g)) kept.push_back(g);
  return FiniteGroup(std::move(kept), degree);
}

FiniteGroup join(const FiniteGroup& a, const FiniteGroup& b) {
  if (a.degree() != b.degree()) throw DomainError("join of groups of different degree");
  if (a.contains(b)) return a;
  if (b.contains(a)) return b;
  std::vector<Permutation> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return subgroup_from(a.degree(), gens);
}

FiniteGroup join(std::span<const FiniteGroup> groups, std::size_t degree) {
  std::vector<Permutation> gens;
  for (const auto& g : groups) {
    if (g.degree() != degree) throw DomainError("join of groups of different degree");
    gens.insert(gens.end(), g.generators().begin(), g.generators().end());
  }
  return subgroup_from(degree, gens);
}

void require_subgroup(const FiniteGroup& G, const FiniteGroup& H, const char* what) {
  if (H.degree() != G.degree() || !G.contains(H))
    throw DomainError(std::string(what) + ": argument is not a subgroup of the ambient group");
}

bool is_normal_in(const FiniteGroup& G, const FiniteGroup& N) {
  if (!G.contains(N)) return false;
  for (const auto& n : N.generators())
    for (const auto& g : G.generators())
      if (!N.contains(n.conjugate(g))) return false;
  return true;
}

}  // namespace fitkit
