#pragma once

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "fitkit/group.hpp"

namespace fitkit {

using ElementIndex = std::uint32_t;

/// Fixed-size set of element indices of one ElementTable.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe) : words_((universe + 63) / 64, 0) {}

  bool test(ElementIndex i) const noexcept { return (words_[i >> 6] >> (i & 63U)) & 1U; }
  void set(ElementIndex i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63U); }
  std::size_t count() const noexcept;
  bool subset_of(const ElementSet& other) const noexcept;
  ElementSet operator&(const ElementSet& other) const;
  std::vector<ElementIndex> indices() const;
  std::size_t hash() const noexcept;

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

  /// Order used for deterministic listings: size first, then the sorted
  /// index lists lexicographically.
  friend bool canonical_less(const ElementSet& a, const ElementSet& b) noexcept;

 private:
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const noexcept { return s.hash(); }
};

/// A subgroup inside an ElementTable: its elements and a small generating
/// set (only generators that enlarged the group are kept).
struct TableSubgroup {
  ElementSet elements;
  std::vector<ElementIndex> gens;
  std::size_t order() const noexcept { return elements.count(); }
};

/// Explicit multiplication engine for a small group. Elements are numbered
/// in ascending canonical order, so index 0 is the identity. Columns of the
/// multiplication table are filled on first use.
///
/// Not thread-safe (lazy cache).
class ElementTable {
 public:
  /// Throws CapExceeded when |G| is above `limit`.
  ElementTable(const FiniteGroup& G, std::uint64_t limit, const char* cap_name);

  std::size_t size() const noexcept { return elems_.size(); }
  std::size_t degree() const noexcept { return degree_; }
  const Permutation& element(ElementIndex i) const { return elems_[i]; }
  ElementIndex index_of(const Permutation& g) const;
  const FiniteGroup& group() const noexcept { return group_; }

  ElementIndex mul(ElementIndex a, ElementIndex b) const { return column(b)[a]; }
  ElementIndex inv(ElementIndex a) const { return inverse_[a]; }
  ElementIndex conj(ElementIndex x, ElementIndex g) const;
  ElementIndex comm(ElementIndex a, ElementIndex b) const {
    return mul(mul(inv(a), inv(b)), mul(a, b));
  }
  ElementIndex power(ElementIndex a, std::uint64_t e) const;

  ElementSet empty_set() const { return ElementSet(size()); }
  TableSubgroup trivial() const;
  TableSubgroup whole() const;

  /// Subgroup generated by `gens`.
  TableSubgroup closure(std::span<const ElementIndex> gens) const;
  /// Smallest subgroup containing `base` and `extra`.
  TableSubgroup extend(const TableSubgroup& base, std::span<const ElementIndex> extra) const;
  TableSubgroup join(const TableSubgroup& a, const TableSubgroup& b) const;
  /// Subgroup of `within` generated by the `within`-conjugates of `h`.
  TableSubgroup normal_closure(const TableSubgroup& within, const TableSubgroup& h) const;
  /// [A, B] computed inside `within` (A, B normalised by `within`).
  TableSubgroup commutator(const TableSubgroup& within, const TableSubgroup& a,
                           const TableSubgroup& b) const;
  TableSubgroup center(const TableSubgroup& h) const;

  FiniteGroup to_group(const TableSubgroup& h) const;
  TableSubgroup from_group(const FiniteGroup& h) const;

  /// Conjugacy classes of the subgroup `h` (classes under `h`), each
  /// sorted ascending, ordered by smallest member.
  std::vector<std::vector<ElementIndex>> classes(const TableSubgroup& h) const;

 private:
  const std::vector<ElementIndex>& column(ElementIndex b) const;

  FiniteGroup group_;
  std::size_t degree_;
  std::vector<Permutation> elems_;
  std::unordered_map<Permutation, ElementIndex, PermutationHash> index_;
  std::vector<ElementIndex> inverse_;
  mutable std::vector<std::vector<ElementIndex>> columns_;
};

}  // namespace fitkit
