#include "fitkit/element_table.hpp"

#include <algorithm>
#include <bit>

#include "fitkit/errors.hpp"

namespace fitkit {

std::size_t ElementSet::count() const noexcept {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool ElementSet::subset_of(const ElementSet& other) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  return true;
}

ElementSet ElementSet::operator&(const ElementSet& other) const {
  ElementSet r = *this;
  for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= other.words_[i];
  return r;
}

std::vector<ElementIndex> ElementSet::indices() const {
  std::vector<ElementIndex> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t bits = words_[w];
    while (bits != 0) {
      out.push_back(static_cast<ElementIndex>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits))));
      bits &= bits - 1;
    }
  }
  return out;
}

std::size_t ElementSet::hash() const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (auto w : words_) h = (h ^ w) * 0x100000001b3ULL;
  return h;
}

bool canonical_less(const ElementSet& a, const ElementSet& b) noexcept {
  const std::size_t ca = a.count(), cb = b.count();
  if (ca != cb) return ca < cb;
  for (std::size_t i = 0; i < a.words_.size(); ++i) {
    const std::uint64_t diff = a.words_[i] ^ b.words_[i];
    if (diff == 0) continue;
    // lowest differing index belongs to the smaller list
    return (a.words_[i] & (diff & (~diff + 1))) != 0;
  }
  return false;
}

ElementTable::ElementTable(const FiniteGroup& G, std::uint64_t limit, const char* cap_name)
    : group_(G), degree_(G.degree()) {
  if (G.order() > limit) throw CapExceeded(cap_name, limit, G.order());
  elems_ = G.elements();
  index_.reserve(elems_.size());
  for (std::size_t i = 0; i < elems_.size(); ++i) index_.emplace(elems_[i], static_cast<ElementIndex>(i));
  inverse_.resize(elems_.size());
  for (std::size_t i = 0; i < elems_.size(); ++i) inverse_[i] = index_of(elems_[i].inverse());
  columns_.resize(elems_.size());
}

ElementIndex ElementTable::index_of(const Permutation& g) const {
  auto it = index_.find(g);
  if (it == index_.end()) throw DomainError("element " + g.to_string() + " is not in the table");
  return it->second;
}

const std::vector<ElementIndex>& ElementTable::column(ElementIndex b) const {
  auto& col = columns_[b];
  if (col.empty()) {
    col.resize(elems_.size());
    for (std::size_t a = 0; a < elems_.size(); ++a) col[a] = index_of(elems_[a] * elems_[b]);
  }
  return col;
}

ElementIndex ElementTable::conj(ElementIndex x, ElementIndex g) const {
  // avoid filling a whole column just for one conjugate
  if (columns_[x].empty()) return index_of(elems_[x].conjugate(elems_[g]));
  return mul(mul(inv(g), x), g);
}

ElementIndex ElementTable::power(ElementIndex a, std::uint64_t e) const {
  ElementIndex r = 0;
  for (std::uint64_t k = 0; k < e; ++k) r = mul(r, a);
  return r;
}

TableSubgroup ElementTable::trivial() const {
  TableSubgroup t{empty_set(), {}};
  t.elements.set(0);
  return t;
}

TableSubgroup ElementTable::whole() const {
  std::vector<ElementIndex> gens;
  for (const auto& g : group_.generators()) gens.push_back(index_of(g));
  return closure(gens);
}

TableSubgroup ElementTable::closure(std::span<const ElementIndex> gens) const {
  return extend(trivial(), gens);
}

TableSubgroup ElementTable::extend(const TableSubgroup& base, std::span<const ElementIndex> extra) const {
  TableSubgroup out = base;
  std::vector<ElementIndex> list = base.elements.indices();
  for (ElementIndex x : extra) {
    if (out.elements.test(x)) continue;
    out.gens.push_back(x);
    // multiply every known element by every generator until closed
    std::size_t start = 0;
    std::vector<ElementIndex> frontier;
    for (ElementIndex e : list) frontier.push_back(e);
    while (start < frontier.size()) {
      ElementIndex e = frontier[start++];
      for (ElementIndex g : out.gens) {
        ElementIndex y = mul(e, g);
        if (!out.elements.test(y)) {
          out.elements.set(y);
          list.push_back(y);
          frontier.push_back(y);
        }
      }
    }
  }
  return out;
}

TableSubgroup ElementTable::join(const TableSubgroup& a, const TableSubgroup& b) const {
  if (b.elements.subset_of(a.elements)) return a;
  if (a.elements.subset_of(b.elements)) return b;
  return extend(a, b.gens);
}

TableSubgroup ElementTable::normal_closure(const TableSubgroup& within, const TableSubgroup& h) const {
  TableSubgroup n = closure(h.gens);
  for (std::size_t i = 0; i < n.gens.size(); ++i)
    for (ElementIndex g : within.gens) {
      ElementIndex c = conj(n.gens[i], g);
      if (!n.elements.test(c)) n = extend(n, std::span<const ElementIndex>(&c, 1));
    }
  return n;
}

TableSubgroup ElementTable::commutator(const TableSubgroup& within, const TableSubgroup& a,
                                       const TableSubgroup& b) const {
  std::vector<ElementIndex> comms;
  for (ElementIndex x : a.gens)
    for (ElementIndex y : b.gens) comms.push_back(comm(x, y));
  TableSubgroup c = closure(comms);
  return normal_closure(within, c);
}

TableSubgroup ElementTable::center(const TableSubgroup& h) const {
  std::vector<ElementIndex> zs;
  for (ElementIndex x : h.elements.indices())
    if (std::all_of(h.gens.begin(), h.gens.end(), [&](ElementIndex g) { return mul(x, g) == mul(g, x); }))
      zs.push_back(x);
  return closure(zs);
}

FiniteGroup ElementTable::to_group(const TableSubgroup& h) const {
  std::vector<Permutation> gens;
  gens.reserve(h.gens.size());
  for (ElementIndex g : h.gens) gens.push_back(elems_[g]);
  return FiniteGroup(std::move(gens), degree_);
}

TableSubgroup ElementTable::from_group(const FiniteGroup& h) const {
  std::vector<ElementIndex> gens;
  for (const auto& g : h.generators()) gens.push_back(index_of(g));
  return closure(gens);
}

std::vector<std::vector<ElementIndex>> ElementTable::classes(const TableSubgroup& h) const {
  std::vector<std::vector<ElementIndex>> out;
  ElementSet seen = empty_set();
  for (ElementIndex x : h.elements.indices()) {
    if (seen.test(x)) continue;
    std::vector<ElementIndex> cls{x};
    seen.set(x);
    for (std::size_t k = 0; k < cls.size(); ++k)
      for (ElementIndex g : h.gens) {
        ElementIndex y = conj(cls[k], g);
        if (!seen.test(y)) {
          seen.set(y);
          cls.push_back(y);
        }
      }
    std::sort(cls.begin(), cls.end());
    out.push_back(std::move(cls));
  }
  return out;
}

}  // namespace fitkit
