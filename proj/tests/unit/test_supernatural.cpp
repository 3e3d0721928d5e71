#include <gtest/gtest.h>

#include <random>

#include "fitkit/errors.hpp"
#include "fitkit/supernatural.hpp"

using fitkit::Supernatural;
using fitkit::DomainError;
using fitkit::ParseError;

namespace {

Supernatural S(const char* s) { return Supernatural::parse(s); }

Supernatural random_supernatural(std::mt19937_64& rng, bool finite) {
  static const std::uint64_t primes[] = {2, 3, 5, 7, 11};
  Supernatural x;
  for (auto p : primes) {
    auto roll = rng() % 8;
    if (roll < 3) continue;
    std::uint64_t e = (!finite && roll == 7) ? Supernatural::kInfinity : rng() % 5;
    x = multiply(x, Supernatural::prime_power(p, e));
  }
  return x;
}

}  // namespace

TEST(Supernatural, ParseAndPrint) {
  EXPECT_EQ(S("2^inf*3^2*5").to_string(), "2^inf*3^2*5");
  EXPECT_EQ(S("5*2^inf*3^2").to_string(), "2^inf*3^2*5");
  EXPECT_EQ(S("1").to_string(), "1");
  EXPECT_EQ(S("2*2").to_string(), "2^2");
  EXPECT_EQ(S("3^0*2").to_string(), "2");
  EXPECT_EQ(Supernatural::from_integer(18).to_string(), "2*3^2");
  EXPECT_THROW(S("4"), ParseError);
  EXPECT_THROW(S("2^x"), ParseError);
  EXPECT_THROW(S(""), ParseError);
  EXPECT_THROW(S("2**3"), ParseError);
}

TEST(Supernatural, MultiplyAndLcmExamples) {
  EXPECT_EQ(multiply(S("2^inf*3"), S("2")), S("2^inf*3"));
  EXPECT_EQ(lcm(S("2^inf*3"), S("2*5")), S("2^inf*3*5"));
  EXPECT_EQ(multiply(Supernatural(), S("7^3*2")), S("7^3*2"));
}

TEST(Supernatural, DivideExamples) {
  EXPECT_EQ(divide_exact(S("2^inf*3"), S("2*3")), S("2^inf"));
  EXPECT_EQ(divide_exact(S("2^3*5"), S("2^3*5")), Supernatural());
  EXPECT_THROW(divide_exact(S("2^3"), S("2^inf")), DomainError);
  EXPECT_THROW(divide_exact(S("2^inf"), S("2^inf")), DomainError);
  EXPECT_THROW(divide_exact(S("2^3"), S("3")), DomainError);
}

TEST(Supernatural, PiPartExamples) {
  const std::uint64_t two_three[] = {2, 3}, two[] = {2};
  EXPECT_EQ(pi_part(S("2^inf*3*5"), two_three), S("2^inf*3"));
  EXPECT_TRUE(is_pi_number(Supernatural::from_integer(8), two));
  EXPECT_EQ(pi_part(S("2*3"), std::span<const std::uint64_t>{}), Supernatural());
  EXPECT_FALSE(is_pi_number(S("2*3"), two));
}

TEST(Supernatural, ToInteger) {
  EXPECT_EQ(S("2*3^2").to_integer(), 18u);
  EXPECT_FALSE(S("2^inf").to_integer().has_value());
  EXPECT_FALSE(S("2^70").to_integer().has_value());
}

TEST(Supernatural, AlgebraicLaws1000Cases) {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 1000; ++i) {
    auto a = random_supernatural(rng, false);
    auto b = random_supernatural(rng, false);
    auto c = random_supernatural(rng, false);
    ASSERT_EQ(multiply(a, b), multiply(b, a));
    ASSERT_EQ(multiply(multiply(a, b), c), multiply(a, multiply(b, c)));
    ASSERT_EQ(multiply(a, Supernatural()), a);
    ASSERT_EQ(lcm(a, a), a);
    ASSERT_EQ(lcm(a, b), lcm(b, a));
    ASSERT_EQ(lcm(lcm(a, b), c), lcm(a, lcm(b, c)));
    ASSERT_TRUE(divides(a, lcm(a, b)));
    // round trip with finite divisor
    auto f = random_supernatural(rng, true);
    ASSERT_EQ(divide_exact(multiply(f, c), f), c);
    ASSERT_EQ(Supernatural::parse(a.to_string()), a);
  }
}
