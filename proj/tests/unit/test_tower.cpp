#include <gtest/gtest.h>

#include "fitkit/caps.hpp"
#include "fitkit/errors.hpp"
#include "fitkit/fitting.hpp"
#include "fitkit/lattice.hpp"
#include "fitkit/named_groups.hpp"
#include "fitkit/numtheory.hpp"
#include "fitkit/perm_core.hpp"
#include "fitkit/tower.hpp"

using namespace fitkit;
namespace G_ = fitkit::groups;

namespace {
Permutation P(const char* s, std::size_t n) { return Permutation::parse(s, n); }

Tower build(std::vector<std::uint64_t> primes) { return build_degenerate_tower(primes, primes.size()); }

const Tower& t2323() {
  static const Tower t = build({2, 3, 2, 3});
  return t;
}
}  // namespace

TEST(TowerValidate, ConstantAndQuotientMaps) {
  EXPECT_TRUE(tower_validate(constant_tower(G_::symmetric(4), 3)).valid);
  FiniteGroup c4 = G_::cyclic(4), c2 = G_::cyclic(2);
  Tower t({c2, c4, c4}, {{P("(1 2)", 2)}, {c4.generators().front().pow(1)}});
  EXPECT_TRUE(tower_validate(t).valid);
  Tower sq({c2, c4}, {{P("(1 2)", 2)}});
  EXPECT_TRUE(sq.check().valid);
}

TEST(TowerValidate, RejectsBadMaps) {
  FiniteGroup c2 = G_::cyclic(2), c3 = G_::cyclic(3);
  Tower wrong_order({c2, c3}, {{P("(1 2)", 2)}});
  EXPECT_FALSE(wrong_order.check().valid);
  EXPECT_EQ(wrong_order.check().level, 1u);
  EXPECT_THROW(wrong_order.projection(1), DomainError);

  Tower not_onto({c2, c2, c2}, {{P("(1 2)", 2)}, {P("()", 2)}});
  EXPECT_FALSE(not_onto.check().valid);
  EXPECT_EQ(not_onto.check().level, 2u);
  EXPECT_NE(not_onto.check().reason.find("surjective"), std::string::npos);

  EXPECT_THROW(Tower({c2, c2}, {}), DomainError);
}

TEST(MinimalFaithfulDegree, Examples) {
  EXPECT_EQ(minimal_faithful_degree(G_::cyclic(2)).degree, 2u);
  EXPECT_EQ(minimal_faithful_degree(G_::symmetric(3)).degree, 3u);
  EXPECT_EQ(minimal_faithful_degree(G_::quaternion8()).degree, 8u);
  EXPECT_EQ(minimal_faithful_degree(FiniteGroup::trivial(3)).degree, 1u);
  auto fa = minimal_faithful_degree(G_::dihedral(4));
  EXPECT_EQ(fa.degree, 4u);
  EXPECT_TRUE(fa.action.kernel().is_trivial());
  EXPECT_TRUE(core(G_::dihedral(4), fa.stabilizer).is_trivial());
}

TEST(MinimalFaithfulDegree, AboveCapUsesPointStabiliser) {
  ScopedCaps small([] { Caps c = caps(); c.subgroups = 10; return c; }());
  auto fa = minimal_faithful_degree(G_::symmetric(4));
  EXPECT_EQ(fa.degree, 4u);
  EXPECT_EQ(fa.stabilizer.order(), 6u);
}

TEST(BuildTower, TwoThree) {
  Tower t = build({2, 3});
  ASSERT_EQ(t.depth(), 2u);
  EXPECT_EQ(t.level(1).order(), 2u);
  EXPECT_EQ(t.level(2).order(), 18u);
  EXPECT_EQ(t.level(2).degree(), 6u);
  FiniteGroup F = fitting_subgroup(t.level(2));
  EXPECT_EQ(F.order(), 9u);
  EXPECT_TRUE(t.project(F, 2, 1).is_trivial());
  EXPECT_TRUE(stable_image(t, 1, Invariant::Fstar, 2).is_trivial());
  EXPECT_TRUE(fd_certificate(t, 2).valid());
  EXPECT_EQ(tower_order(t, 2).to_string(), "2*3^2");
  EXPECT_EQ(t.primes(), (std::vector<std::uint64_t>{2, 3}));
}

TEST(BuildTower, SingleLevel) {
  Tower t = build({2});
  EXPECT_EQ(t.level(1).order(), 2u);
  EXPECT_EQ(fitting_subgroup(t.level(1)), t.level(1));
  EXPECT_TRUE(fd_certificate(t, 1).valid());
  EXPECT_TRUE(fd_certificate(constant_tower(FiniteGroup::trivial(), 1), 1).valid());
}

TEST(BuildTower, Errors) {
  const std::uint64_t same[] = {2, 3, 3}, composite[] = {2, 4}, few[] = {2};
  EXPECT_THROW(build_degenerate_tower(same, 3), DomainError);
  EXPECT_NO_THROW(build_degenerate_tower(same, 2));
  EXPECT_THROW(build_degenerate_tower(composite, 2), DomainError);
  EXPECT_THROW(build_degenerate_tower(few, 2), DomainError);
  EXPECT_THROW(build_degenerate_tower(few, 0), DomainError);
  ScopedCaps tiny([] { Caps c = caps(); c.tower_order = 5; return c; }());
  const std::uint64_t ok[] = {2, 3};
  try {
    build_degenerate_tower(ok, 2);
    FAIL() << "expected CapExceeded";
  } catch (const CapExceeded& e) {
    EXPECT_EQ(e.cap(), "tower_order");
  }
}

TEST(BuildTower, TwoThreeTwoThree) {
  const Tower& t = t2323();
  const Order orders[] = {2, 18, 1152, 839808};
  for (std::size_t i = 1; i <= 4; ++i) {
    EXPECT_EQ(t.level(i).order(), orders[i - 1]);
    FiniteGroup F = fitting_subgroup(t.level(i));
    EXPECT_TRUE(is_p_group(F, t.primes()[i - 1])) << "level " << i;
    EXPECT_FALSE(F.is_trivial());
  }
  auto cert = fd_certificate(t, 4);
  EXPECT_EQ(cert.stable_images.size(), 3u);
  EXPECT_TRUE(cert.valid());
}

TEST(BuildTower, FittingIsFunctorial) {
  const Tower& t = t2323();
  for (std::size_t i = 1; i < 3; ++i) {
    FittingReport lo = generalized_fitting(t.level(i)), hi = generalized_fitting(t.level(i + 1));
    EXPECT_TRUE(lo.fitting.contains(t.project(hi.fitting, i + 1, i)));
    EXPECT_TRUE(lo.fstar.contains(t.project(hi.fstar, i + 1, i)));
  }
}

TEST(BuildTower, DistinctPrimesHaveElementarySylows) {
  Tower t = build({2, 3, 5});
  EXPECT_EQ(t.level(3).order(), 281250u);
  for (std::size_t i = 1; i <= 3; ++i)
    for (auto p : prime_divisors(t.level(i).order()))
      EXPECT_TRUE(is_elementary_abelian(sylow_subgroup(t.level(i), p))) << "level " << i << " p " << p;
}

TEST(StableImage, ConstantSymmetric) {
  Tower t = constant_tower(G_::symmetric(4), 3);
  EXPECT_EQ(stable_image(t, 1, Invariant::Fstar, 2), G_::klein_four());
  EXPECT_EQ(stable_image(t, 2, Invariant::Fstar, 3), G_::klein_four());
  EXPECT_EQ(stable_image(t, 1, Invariant::Fitting, 3), G_::klein_four());
  EXPECT_TRUE(stable_image(t, 1, Invariant::Layer, 3).is_trivial());
  EXPECT_FALSE(fd_certificate(t, 3).valid());
  EXPECT_THROW(stable_image(t, 2, Invariant::Fstar, 2), DomainError);
  EXPECT_THROW(stable_image(t, 1, Invariant::Fstar, 4), DomainError);
}

TEST(StableImage, AntitoneInDepth) {
  const Tower& t = t2323();
  FiniteGroup prev = stable_image(t, 2, Invariant::Fitting, 3);
  FiniteGroup next = stable_image(t, 2, Invariant::Fitting, 4);
  EXPECT_TRUE(prev.contains(next));
}

TEST(Witness, TwoThree) {
  Tower t = build({2, 3});
  auto w = theorem_d_witness(t, {1, P("(1 2)", 2)}, 2);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->level, 2u);
  EXPECT_EQ(w->kernel.order(), 3u);
  EXPECT_EQ(w->quotient_order, 6u);
  EXPECT_EQ(w->fstar_order, 3u);
  // depth 1: C2 is its own F*
  EXPECT_FALSE(theorem_d_witness(t, {1, P("(1 2)", 2)}, 1).has_value());
}

TEST(Witness, ConstantSymmetricHasNone) {
  Tower t = constant_tower(G_::symmetric(4), 3);
  WitnessSearch s(t);
  for (const auto& x : G_::klein_four().elements()) {
    if (x.is_identity()) continue;
    EXPECT_FALSE(s.find({1, x}, 3).has_value()) << x.to_string();
  }
  EXPECT_TRUE(s.find({1, P("(1 2)", 4)}, 1).has_value());
}

TEST(Witness, Errors) {
  Tower t = build({2, 3});
  EXPECT_THROW(theorem_d_witness(t, {1, P("()", 2)}, 2), DomainError);
  EXPECT_THROW(theorem_d_witness(t, {1, P("(1 2)", 2)}, 3), DomainError);
  EXPECT_THROW(theorem_d_witness(t, {2, P("(1 2)", 2)}, 2), DomainError);
}

TEST(Witness, EveryElementOfLowLevels) {
  const Tower& t = t2323();
  WitnessSearch s(t);
  for (std::size_t i = 1; i <= 2; ++i)
    for (const auto& x : t.level(i).elements()) {
      if (x.is_identity()) continue;
      auto w = s.find({i, x}, 4);
      ASSERT_TRUE(w.has_value()) << "level " << i << " " << x.to_string();
      EXPECT_EQ(t.project(w->lift, w->level, i), x);
    }
}

TEST(TowerOrder, Divisibility) {
  const Tower& t = t2323();
  for (std::size_t J = 1; J < 4; ++J) EXPECT_TRUE(divides(tower_order(t, J), tower_order(t, J + 1)));
  EXPECT_EQ(tower_order(constant_tower(G_::symmetric(4), 3), 3), Supernatural::from_integer(24));
  FiniteGroup c2 = G_::cyclic(2), c4 = G_::cyclic(4), c8 = G_::cyclic(8);
  Tower cp({c2, c4, c8}, {{P("(1 2)", 2)}, {P("(1 2 3 4)", 4)}});
  ASSERT_TRUE(cp.check().valid);
  EXPECT_EQ(tower_order(cp, 3).to_string(), "2^3");
}

TEST(TowerJson, RoundTrip) {
  for (const Tower& t : {build({2, 3, 5}), constant_tower(G_::symmetric(4), 2)}) {
    std::string s = tower_to_json(t);
    Tower back = tower_from_json(s);
    EXPECT_TRUE(back == t);
    EXPECT_EQ(tower_to_json(back), s);
    EXPECT_TRUE(back.check().valid);
  }
}

TEST(TowerJson, Malformed) {
  EXPECT_THROW(tower_from_json("{"), ParseError);
  EXPECT_THROW(tower_from_json("{}"), ParseError);
  EXPECT_THROW(tower_from_json(R"j({"levels": [], "projections": []})j"), ParseError);
  EXPECT_THROW(tower_from_json(R"j({"levels": [{"degree": 2, "generators": ["(1 3)"]}], "projections": []})j"),
               ParseError);
  EXPECT_THROW(tower_from_json(R"j({"levels": [{"degree": 2, "generators": ["(1 2)"]}], "projections": [{}]})j"),
               ParseError);
  // well-formed but not a homomorphism: loads, then fails validation
  Tower bad = tower_from_json(R"j({"levels": [{"degree": 2, "generators": ["(1 2)"]},
      {"degree": 3, "generators": ["(1 2 3)"]}],
      "projections": [{"generator_images": ["(1 2)"]}]})j");
  EXPECT_FALSE(bad.check().valid);
}
