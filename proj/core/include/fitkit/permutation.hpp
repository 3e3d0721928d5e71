#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fitkit {

using Point = std::uint32_t;
using Order = std::uint64_t;

/// A bijection of {0, ..., n-1}. Text I/O uses 1-based cycle notation.
///
/// Products compose left to right: `(a * b)(x) = b(a(x))`, i.e. apply `a`
/// first. Conjugation is `x^g = g^-1 * x * g` and the commutator is
/// `[a, b] = a^-1 * b^-1 * a * b`.
class Permutation {
 public:
  /// Identity of degree 1.
  Permutation() : images_{0} {}
  explicit Permutation(std::size_t degree);
  /// Throws DomainError unless `images` is a bijection of {0..n-1}.
  explicit Permutation(std::vector<Point> images);

  /// Parses `(1 2 3)(4 5)`; `()` is the identity. Throws ParseError on a
  /// non-numeric token, a repeated point or a point outside 1..degree.
  static Permutation parse(std::string_view text, std::size_t degree);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](Point x) const noexcept { return images_[x]; }
  const std::vector<Point>& images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  std::optional<Point> smallest_moved_point() const noexcept;

  Permutation operator*(const Permutation& rhs) const;
  Permutation& operator*=(const Permutation& rhs);
  Permutation inverse() const;
  Permutation pow(std::int64_t e) const;
  Permutation conjugate(const Permutation& by) const;  // by^-1 * this * by
  Order order() const;

  /// Same permutation on a larger point set (extra points fixed).
  Permutation extended(std::size_t degree) const;

  std::string to_string() const;  // 1-based cycles, "()" for identity
  std::size_t hash() const noexcept;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<Point> images_;
};

Permutation commutator(const Permutation& a, const Permutation& b);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept { return p.hash(); }
};

}  // namespace fitkit
