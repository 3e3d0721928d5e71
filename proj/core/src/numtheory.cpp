#include "fitkit/numtheory.hpp"

namespace fitkit {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t r = 1;
  if (n == 0 || p < 2) return r;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

unsigned p_valuation(std::uint64_t n, std::uint64_t p) {
  unsigned k = 0;
  if (n == 0 || p < 2) return k;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  return k;
}

}  // namespace fitkit
