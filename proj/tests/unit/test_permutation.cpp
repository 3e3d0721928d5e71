#include <gtest/gtest.h>

#include <random>
#include <set>

#include "fitkit/errors.hpp"
#include "fitkit/group.hpp"
#include "fitkit/named_groups.hpp"
#include "fitkit/perm_core.hpp"

using namespace fitkit;

namespace {

Permutation P(const char* s, std::size_t n) { return Permutation::parse(s, n); }

// Closure of the generators by breadth-first multiplication; independent
// of the stabiliser chain.
std::set<Permutation> enumerate_by_closure(const std::vector<Permutation>& gens, std::size_t n) {
  std::set<Permutation> seen{Permutation(n)};
  std::vector<Permutation> queue{Permutation(n)};
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (const auto& g : gens) {
      Permutation x = queue[i] * g;
      if (seen.insert(x).second) queue.push_back(x);
    }
  return seen;
}

}  // namespace

TEST(Permutation, InvolutionSquaredIsIdentity) {
  EXPECT_TRUE((P("(1 2)", 3) * P("(1 2)", 3)).is_identity());
}

TEST(Permutation, ComposesLeftFactorFirst) {
  EXPECT_EQ((P("(1 2)", 3) * P("(2 3)", 3)).to_string(), "(1 3 2)");
}

TEST(Permutation, InverseReversesCycle) {
  EXPECT_EQ(P("(1 2 3)", 3).inverse().to_string(), "(1 3 2)");
}

TEST(Permutation, PowersAndOrder) {
  Permutation c = P("(1 2 3 4)(5 6)", 6);
  EXPECT_EQ(c.order(), 4u);
  EXPECT_EQ(c.pow(2).to_string(), "(1 3)(2 4)");
  EXPECT_EQ(c.pow(-1), c.inverse());
  EXPECT_TRUE(c.pow(4).is_identity());
}

TEST(Permutation, ConjugationMatchesDefinition) {
  Permutation x = P("(1 2 3)", 4), g = P("(3 4)", 4);
  EXPECT_EQ(x.conjugate(g), g.inverse() * x * g);
  EXPECT_EQ(x.conjugate(g).to_string(), "(1 2 4)");
}

TEST(Permutation, ParsePrintRoundTrip) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    std::vector<Point> img(9);
    std::iota(img.begin(), img.end(), Point{0});
    std::shuffle(img.begin(), img.end(), rng);
    Permutation p(img);
    EXPECT_EQ(Permutation::parse(p.to_string(), 9), p);
  }
}

TEST(Permutation, ParseErrors) {
  EXPECT_THROW(P("(1 x)", 3), ParseError);
  EXPECT_THROW(P("(1 2)(2 3)", 3), ParseError);
  EXPECT_THROW(P("(1 4)", 3), ParseError);
  EXPECT_THROW(P("(1 2", 3), ParseError);
  EXPECT_TRUE(P("()", 3).is_identity());
}

TEST(Permutation, DegreeMismatchThrows) {
  EXPECT_THROW(P("(1 2)", 2) * P("(1 2)", 3), DomainError);
}

TEST(FiniteGroup, OrdersOfSmallGroups) {
  EXPECT_EQ(group_from_generators({P("(1 2)", 3), P("(1 2 3)", 3)}).order(), 6u);
  EXPECT_EQ(group_from_generators({P("(1 2 3 4)", 4), P("(1 3)", 4)}).order(), 8u);
  FiniteGroup one = group_from_generators({});
  EXPECT_EQ(one.order(), 1u);
  EXPECT_EQ(one.degree(), 1u);
  EXPECT_THROW(group_from_generators({P("(1 2)", 2), P("(1 2)", 3)}), DomainError);
}

TEST(FiniteGroup, D8OrderAgreesWithClosure) {
  std::vector<Permutation> gens{P("(1 2 3 4)", 4), P("(1 3)", 4)};
  EXPECT_EQ(enumerate_by_closure(gens, 4).size(), 8u);
}

TEST(FiniteGroup, NamedGroupOrders) {
  EXPECT_EQ(groups::symmetric(6).order(), 720u);
  EXPECT_EQ(groups::alternating(6).order(), 360u);
  EXPECT_EQ(groups::alternating(5).order(), 60u);
  EXPECT_EQ(groups::alternating(4).order(), 12u);
  EXPECT_EQ(groups::quaternion8().order(), 8u);
  EXPECT_EQ(groups::dihedral(10).order(), 20u);
  EXPECT_EQ(groups::special_linear2(3).order(), 24u);
  EXPECT_EQ(groups::special_linear2(5).order(), 120u);
  EXPECT_EQ(groups::special_linear2(5).degree(), 24u);
  EXPECT_EQ(groups::elementary_abelian(2, 6).order(), 64u);
  EXPECT_EQ(groups::wreath_product(groups::cyclic(2), groups::cyclic(2)).order(), 8u);
  EXPECT_EQ(groups::symmetric(8).order(), 40320u);
}

// Membership and order agree with exhaustive closure for random subgroups.
TEST(FiniteGroup, ChainAgreesWithClosureOnRandomGroups) {
  std::mt19937_64 rng(11);
  int checked = 0;
  for (int t = 0; t < 60 && checked < 25; ++t) {
    std::size_t n = 3 + rng() % 4;
    std::vector<Permutation> gens;
    for (int k = 0; k < 2; ++k) {
      std::vector<Point> img(n);
      std::iota(img.begin(), img.end(), Point{0});
      std::shuffle(img.begin(), img.end(), rng);
      gens.emplace_back(img);
    }
    FiniteGroup G(gens);
    auto all = enumerate_by_closure(gens, n);
    if (all.size() > 200) continue;
    ++checked;
    EXPECT_EQ(G.order(), all.size());
    Order product = 1;
    for (const auto& L : G.chain().levels()) product *= L.orbit.size();
    EXPECT_EQ(product, G.order());
    // every permutation of Sym(n) is a member iff closure contains it
    groups::symmetric(n).for_each_element(
        [&](const Permutation& x) { EXPECT_EQ(G.contains(x), all.count(x) == 1); });
  }
  EXPECT_GE(checked, 10);
}
