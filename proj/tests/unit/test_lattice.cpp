#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "brute.hpp"
#include "fitkit/caps.hpp"
#include "fitkit/errors.hpp"
#include "fitkit/lattice.hpp"
#include "fitkit/named_groups.hpp"
#include "fitkit/perm_core.hpp"

using namespace fitkit;
namespace G_ = fitkit::groups;

namespace {

Permutation P(const char* s, std::size_t n) { return Permutation::parse(s, n); }

// Subgroups generated by at most two elements, by brute closure.
std::set<brute::Set> two_generated(const FiniteGroup& G) {
  auto all = brute::elements(G);
  std::vector<Permutation> el(all.begin(), all.end());
  std::set<brute::Set> out;
  for (std::size_t i = 0; i < el.size(); ++i)
    for (std::size_t j = i; j < el.size(); ++j) out.insert(brute::closure({el[i], el[j]}, G.degree()));
  return out;
}

std::vector<Order> orders(const std::vector<FiniteGroup>& gs) {
  std::vector<Order> o;
  for (const auto& g : gs) o.push_back(g.order());
  return o;
}

}  // namespace

TEST(NormalSubgroups, Sym4) {
  auto L = normal_subgroups(G_::symmetric(4));
  EXPECT_EQ(orders(L.members), (std::vector<Order>{1, 4, 12, 24}));
  EXPECT_EQ(L.members[1], G_::klein_four());
  // oracle: S4 subgroups are 2-generated
  auto all = brute::elements(G_::symmetric(4));
  std::size_t normal = 0;
  for (const auto& H : two_generated(G_::symmetric(4))) normal += brute::is_normal(all, H);
  EXPECT_EQ(normal, 4u);
}

TEST(NormalSubgroups, SimpleAndQ8) {
  EXPECT_EQ(orders(normal_subgroups(G_::alternating(5)).members), (std::vector<Order>{1, 60}));
  EXPECT_EQ(normal_subgroups(G_::quaternion8()).members.size(), 6u);
}

TEST(NormalSubgroups, ClosedUnderJoinAndNormal) {
  for (const auto& G : {G_::dihedral(6), G_::direct_product(G_::symmetric(3), G_::cyclic(4)),
                        G_::elementary_abelian(2, 3)}) {
    auto L = normal_subgroups(G);
    EXPECT_TRUE(L.members.front().is_trivial());
    EXPECT_EQ(L.members.back(), G);
    for (const auto& A : L.members) {
      EXPECT_TRUE(is_normal_in(G, A));
      for (const auto& B : L.members) {
        auto J = join(A, B);
        EXPECT_TRUE(std::any_of(L.members.begin(), L.members.end(), [&](const FiniteGroup& M) { return M == J; }));
      }
    }
  }
  EXPECT_EQ(normal_subgroups(G_::elementary_abelian(2, 3)).members.size(), 16u);
}

TEST(NormalSubgroups, CapExceeded) {
  ScopedCaps small([] { Caps c; c.normal_lattice = 100; return c; }());
  EXPECT_THROW(normal_subgroups(G_::symmetric(5)), CapExceeded);
}

TEST(MinimalNormal, Examples) {
  auto m = minimal_normal_subgroups(G_::symmetric(4));
  ASSERT_EQ(m.size(), 1u);
  EXPECT_EQ(m[0], G_::klein_four());
  EXPECT_EQ(orders(minimal_normal_subgroups(G_::cyclic(6))), (std::vector<Order>{2, 3}));
  auto a5 = minimal_normal_subgroups(G_::alternating(5));
  ASSERT_EQ(a5.size(), 1u);
  EXPECT_EQ(a5[0].order(), 60u);
  EXPECT_THROW(minimal_normal_subgroups(FiniteGroup::trivial(3)), DomainError);
}

TEST(MinimalNormal, CharacteristicallySimple) {
  // the minimal normal subgroups of N are permuted transitively by G
  for (const auto& G : {G_::direct_product(G_::alternating(5), G_::alternating(5)),
                        G_::wreath_product(G_::cyclic(3), G_::cyclic(2)), G_::symmetric(4)}) {
    for (const auto& N : minimal_normal_subgroups(G)) {
      auto parts = minimal_normal_subgroups(N);
      for (const auto& X : parts) EXPECT_TRUE(are_conjugate(G, parts.front(), X) || is_abelian(N));
      if (!is_abelian(N)) EXPECT_EQ(join(parts, G.degree()), N);
    }
  }
}

TEST(Socle, Examples) {
  EXPECT_EQ(socle(G_::symmetric(4)), G_::klein_four());
  auto AA = G_::direct_product(G_::alternating(5), G_::alternating(5));
  EXPECT_EQ(socle(AA), AA);
  EXPECT_EQ(socle(G_::cyclic(7)), G_::cyclic(7));
  EXPECT_TRUE(socle(FiniteGroup::trivial()).is_trivial());
}

TEST(IsSimple, Examples) {
  EXPECT_TRUE(is_simple(G_::alternating(5)));
  EXPECT_TRUE(is_simple(G_::cyclic(5)));
  EXPECT_FALSE(is_simple(G_::symmetric(5)));
  EXPECT_FALSE(is_simple(G_::cyclic(6)));
  EXPECT_FALSE(is_simple(FiniteGroup::trivial()));
}

TEST(AllSubgroups, Examples) {
  auto s3 = all_subgroups(G_::symmetric(3));
  EXPECT_EQ(s3.subgroups.size(), 6u);
  EXPECT_EQ(std::count(s3.maximal_flags.begin(), s3.maximal_flags.end(), true), 4);
  auto c5 = all_subgroups(G_::cyclic(5));
  EXPECT_EQ(c5.subgroups.size(), 2u);
  EXPECT_EQ(std::count(c5.maximal_flags.begin(), c5.maximal_flags.end(), true), 1);
  auto m12 = maximal_subgroups(G_::cyclic(12));
  EXPECT_EQ(orders(m12), (std::vector<Order>{4, 6}));
}

TEST(AllSubgroups, Sym4AgainstBruteForce) {
  auto inv = all_subgroups(G_::symmetric(4));
  EXPECT_EQ(inv.subgroups.size(), two_generated(G_::symmetric(4)).size());
  EXPECT_EQ(inv.subgroups.size(), 30u);
  // maximal: A4, three D8, four S3
  EXPECT_EQ(std::count(inv.maximal_flags.begin(), inv.maximal_flags.end(), true), 8);
}

TEST(AllSubgroups, CapExceeded) {
  EXPECT_THROW(all_subgroups(G_::symmetric(6)), CapExceeded);
}

TEST(Core, Examples) {
  auto S4 = G_::symmetric(4);
  EXPECT_TRUE(core(S4, FiniteGroup({P("(1 2)", 4), P("(1 2 3)", 4)})).is_trivial());
  EXPECT_EQ(core(S4, G_::alternating(4)), G_::alternating(4));
  EXPECT_EQ(core(S4, sylow_subgroup(S4, 2)), G_::klein_four());
  EXPECT_THROW(core(G_::alternating(4), FiniteGroup({P("(1 2)", 4)})), DomainError);
}

TEST(Frattini, Examples) {
  EXPECT_EQ(frattini(G_::cyclic(4)).order(), 2u);
  EXPECT_TRUE(frattini(G_::symmetric(3)).is_trivial());
  auto Q = G_::quaternion8();
  EXPECT_EQ(frattini(Q), center(Q));
  EXPECT_TRUE(frattini(FiniteGroup::trivial()).is_trivial());
}

TEST(Frattini, NilpotentAndNonGenerators) {
  std::mt19937_64 rng(7);
  for (const auto& G : {G_::dihedral(8), G_::special_linear2(3), G_::direct_product(G_::cyclic(4), G_::symmetric(3)),
                        G_::quaternion8()}) {
    FiniteGroup phi = frattini(G);
    EXPECT_TRUE(is_nilpotent(phi));
    auto q = quotient_with_projection(G, phi);
    for (int t = 0; t < 30; ++t) {
      std::vector<Permutation> X{G.random_element(rng), G.random_element(rng)};
      std::vector<Permutation> Y;
      for (const auto& x : X) Y.push_back(q.projection.image(x));
      bool gen_g = subgroup_from(G.degree(), X).order() == G.order();
      bool gen_q = subgroup_from(q.group.degree(), Y).order() == q.group.order();
      EXPECT_EQ(gen_g, gen_q);
    }
  }
}

TEST(Primitive, Examples) {
  auto s4 = is_primitive(G_::symmetric(4));
  ASSERT_TRUE(s4.primitive);
  EXPECT_EQ(s4.witness->order(), 6u);
  EXPECT_FALSE(is_primitive(G_::cyclic(4)).primitive);
  auto c5 = is_primitive(G_::cyclic(5));
  ASSERT_TRUE(c5.primitive);
  EXPECT_TRUE(c5.witness->is_trivial());
}

TEST(PrimitiveKernels, Examples) {
  EXPECT_EQ(orders(primitive_quotient_kernels(G_::symmetric(4))), (std::vector<Order>{1, 4, 12}));
  EXPECT_EQ(orders(primitive_quotient_kernels(G_::cyclic(5))), (std::vector<Order>{1}));
  EXPECT_EQ(orders(primitive_quotient_kernels(G_::cyclic(6))), (std::vector<Order>{2, 3}));
  for (const auto& K : primitive_quotient_kernels(G_::symmetric(4))) {
    auto q = quotient_with_projection(G_::symmetric(4), K);
    EXPECT_TRUE(is_primitive(q.group).primitive);
  }
}

TEST(MaximalByCore, RecursionMatchesInventory) {
  std::vector<FiniteGroup> gs{G_::symmetric(4), G_::direct_product(G_::symmetric(4), G_::symmetric(3)),
                              G_::dihedral(12), G_::special_linear2(3), G_::wreath_product(G_::cyclic(2), G_::cyclic(2)),
                              G_::wreath_product(G_::cyclic(3), G_::cyclic(2)), G_::elementary_abelian(3, 2)};
  for (const auto& G : gs) {
    auto expected = primitive_quotient_kernels(G);
    auto phi = frattini(G);
    ScopedCaps forced([] { Caps c; c.subgroups = 4; return c; }());
    auto got = primitive_quotient_kernels(G);
    ASSERT_EQ(got.size(), expected.size()) << G.order();
    for (std::size_t i = 0; i < got.size(); ++i) EXPECT_EQ(got[i], expected[i]);
    EXPECT_EQ(frattini(G), phi);
  }
}

TEST(MaximalByCore, NoAbelianMinimalNormalAboveCap) {
  ScopedCaps forced([] { Caps c; c.subgroups = 10; return c; }());
  EXPECT_THROW(primitive_quotient_kernels(G_::alternating(5)), CapExceeded);
}

TEST(Hall, Examples) {
  auto S4 = G_::symmetric(4);
  const std::uint64_t three[] = {3}, two_three[] = {2, 3}, two_five[] = {2, 5};
  EXPECT_EQ(hall_subgroup(S4, three)->order(), 3u);
  EXPECT_EQ(*hall_subgroup(S4, two_three), S4);
  EXPECT_FALSE(hall_subgroup(G_::alternating(5), two_five).has_value());
  const std::uint64_t none[] = {7};
  EXPECT_TRUE(hall_subgroup(S4, none)->is_trivial());
}

TEST(Hall, SolubleGroupsConjugateAcrossSeeds) {
  std::vector<FiniteGroup> gs{G_::direct_product(G_::symmetric(4), G_::symmetric(3)), G_::dihedral(10),
                              G_::special_linear2(3), G_::direct_product(G_::cyclic(6), G_::symmetric(3))};
  for (const auto& G : gs) {
    auto ps = [&] { std::vector<std::uint64_t> v; for (auto p : {2u, 3u, 5u}) if (G.order() % p == 0) v.push_back(p); return v; }();
    for (std::size_t mask = 1; mask < (1u << ps.size()); ++mask) {
      std::vector<std::uint64_t> pi;
      for (std::size_t i = 0; i < ps.size(); ++i)
        if (mask & (1u << i)) pi.push_back(ps[i]);
      auto a = hall_subgroup(G, pi, 0);
      auto b = hall_subgroup(G, pi, 5);
      ASSERT_TRUE(a && b);
      EXPECT_TRUE(are_conjugate(G, *a, *b));
    }
  }
}
