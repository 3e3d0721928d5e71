#include "fitkit/supernatural.hpp"

#include <algorithm>
#include <charconv>

#include "fitkit/errors.hpp"
#include "fitkit/numtheory.hpp"

namespace fitkit {

namespace {

constexpr auto kInf = Supernatural::kInfinity;

std::uint64_t add_exp(std::uint64_t a, std::uint64_t b) {
  if (a == kInf || b == kInf) return kInf;
  if (a > kInf - 1 - b) throw DomainError("supernatural exponent overflow");
  return a + b;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::uint64_t parse_number(std::string_view s, std::string_view whole) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw ParseError("bad number '" + std::string(s) + "' in supernatural '" + std::string(whole) + "'");
  return v;
}

}  // namespace

Supernatural Supernatural::from_integer(std::uint64_t n) {
  if (n == 0) throw DomainError("supernatural: 0 is not a supernatural number");
  Supernatural s;
  for (auto p : prime_divisors(n)) s.exps_[p] = p_valuation(n, p);
  return s;
}

Supernatural Supernatural::prime_power(std::uint64_t p, std::uint64_t e) {
  if (!is_prime(p)) throw DomainError("supernatural: " + std::to_string(p) + " is not prime");
  Supernatural s;
  if (e != 0) s.exps_[p] = e;
  return s;
}

Supernatural Supernatural::parse(std::string_view text) {
  std::string_view t = trim(text);
  if (t.empty()) throw ParseError("empty supernatural number");
  Supernatural out;
  if (t == "1") return out;
  std::size_t start = 0;
  while (start <= t.size()) {
    std::size_t star = t.find('*', start);
    std::string_view factor = trim(t.substr(start, star == std::string_view::npos ? t.npos : star - start));
    std::size_t caret = factor.find('^');
    std::uint64_t p = parse_number(trim(factor.substr(0, caret)), t);
    std::uint64_t e = 1;
    if (caret != std::string_view::npos) {
      std::string_view es = trim(factor.substr(caret + 1));
      e = (es == "inf") ? kInf : parse_number(es, t);
    }
    if (!is_prime(p)) throw ParseError("'" + std::to_string(p) + "' is not prime in '" + std::string(t) + "'");
    out = multiply(out, prime_power(p, e));
    if (star == std::string_view::npos) break;
    start = star + 1;
  }
  return out;
}

std::uint64_t Supernatural::exponent(std::uint64_t p) const {
  auto it = exps_.find(p);
  return it == exps_.end() ? 0 : it->second;
}

bool Supernatural::is_finite() const noexcept {
  return std::none_of(exps_.begin(), exps_.end(), [](const auto& kv) { return kv.second == kInf; });
}

std::optional<std::uint64_t> Supernatural::to_integer() const {
  std::uint64_t v = 1;
  for (const auto& [p, e] : exps_) {
    if (e == kInf) return std::nullopt;
    for (std::uint64_t k = 0; k < e; ++k) {
      if (v > UINT64_MAX / p) return std::nullopt;
      v *= p;
    }
  }
  return v;
}

std::string Supernatural::to_string() const {
  if (exps_.empty()) return "1";
  std::string s;
  for (const auto& [p, e] : exps_) {
    if (!s.empty()) s += '*';
    s += std::to_string(p);
    if (e == kInf)
      s += "^inf";
    else if (e != 1)
      s += '^' + std::to_string(e);
  }
  return s;
}

Supernatural multiply(const Supernatural& a, const Supernatural& b) {
  Supernatural c = a;
  for (const auto& [p, e] : b.exps_) c.exps_[p] = add_exp(c.exponent(p), e);
  return c;
}

Supernatural lcm(const Supernatural& a, const Supernatural& b) {
  Supernatural c = a;
  for (const auto& [p, e] : b.exps_) c.exps_[p] = std::max(c.exponent(p), e);
  return c;
}

Supernatural divide_exact(const Supernatural& a, const Supernatural& b) {
  Supernatural c = a;
  for (const auto& [p, e] : b.exps_) {
    const std::uint64_t have = a.exponent(p);
    if (e == kInf && have == kInf)
      throw DomainError("divide_exact: " + std::to_string(p) + "^inf / " + std::to_string(p) + "^inf is undefined");
    if (e == kInf || (have != kInf && have < e))
      throw DomainError("divide_exact: " + b.to_string() + " does not divide " + a.to_string());
    if (have == kInf) continue;
    if (have == e)
      c.exps_.erase(p);
    else
      c.exps_[p] = have - e;
  }
  return c;
}

bool divides(const Supernatural& b, const Supernatural& a) {
  return std::all_of(b.exponents().begin(), b.exponents().end(),
                     [&](const auto& kv) { return kv.second <= a.exponent(kv.first); });
}

Supernatural pi_part(const Supernatural& a, std::span<const std::uint64_t> pi) {
  Supernatural c;
  for (const auto& [p, e] : a.exps_)
    if (std::find(pi.begin(), pi.end(), p) != pi.end()) c.exps_[p] = e;
  return c;
}

bool is_pi_number(const Supernatural& a, std::span<const std::uint64_t> pi) { return pi_part(a, pi) == a; }

}  // namespace fitkit
