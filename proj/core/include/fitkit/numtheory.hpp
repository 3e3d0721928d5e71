#pragma once

#include <cstdint>
#include <vector>

namespace fitkit {

bool is_prime(std::uint64_t n);
/// Distinct prime divisors, ascending.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);
/// Largest power of p dividing n.
std::uint64_t p_part(std::uint64_t n, std::uint64_t p);
/// Exponent of p in n.
unsigned p_valuation(std::uint64_t n, std::uint64_t p);

}  // namespace fitkit
