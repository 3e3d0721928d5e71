#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace fitkit {

/// Formal product of prime powers whose exponents may be infinite.
/// Only finitely many primes are supported; zero exponents are never
/// stored, so equal numbers have equal representations.
class Supernatural {
 public:
  static constexpr std::uint64_t kInfinity = UINT64_MAX;

  Supernatural() = default;  // 1
  /// n >= 1.
  static Supernatural from_integer(std::uint64_t n);
  static Supernatural prime_power(std::uint64_t p, std::uint64_t e);
  /// `2^inf*3^2*5`, `1`. Throws ParseError.
  static Supernatural parse(std::string_view text);

  std::uint64_t exponent(std::uint64_t p) const;
  const std::map<std::uint64_t, std::uint64_t>& exponents() const noexcept { return exps_; }
  bool is_finite() const noexcept;
  /// Value when finite and representable in 64 bits.
  std::optional<std::uint64_t> to_integer() const;
  std::string to_string() const;

  friend bool operator==(const Supernatural&, const Supernatural&) = default;

 private:
  std::map<std::uint64_t, std::uint64_t> exps_;
  friend Supernatural multiply(const Supernatural&, const Supernatural&);
  friend Supernatural lcm(const Supernatural&, const Supernatural&);
  friend Supernatural divide_exact(const Supernatural&, const Supernatural&);
  friend Supernatural pi_part(const Supernatural&, std::span<const std::uint64_t>);
};

/// Exponents add; infinity absorbs.
Supernatural multiply(const Supernatural& a, const Supernatural& b);
/// Exponentwise maximum.
Supernatural lcm(const Supernatural& a, const Supernatural& b);
/// The c with b*c = a. DomainError when b does not divide a, or when some
/// prime has infinite exponent in both (the quotient exponent is undefined).
Supernatural divide_exact(const Supernatural& a, const Supernatural& b);
bool divides(const Supernatural& b, const Supernatural& a);
Supernatural pi_part(const Supernatural& a, std::span<const std::uint64_t> pi);
bool is_pi_number(const Supernatural& a, std::span<const std::uint64_t> pi);

}  // namespace fitkit
