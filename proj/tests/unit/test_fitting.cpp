#include <gtest/gtest.h>

#include "brute.hpp"
#include "fitkit/caps.hpp"
#include "fitkit/errors.hpp"
#include "fitkit/fitting.hpp"
#include "fitkit/lattice.hpp"
#include "fitkit/named_groups.hpp"
#include "fitkit/perm_core.hpp"

using namespace fitkit;
namespace G_ = fitkit::groups;

namespace {
Permutation P(const char* s, std::size_t n) { return Permutation::parse(s, n); }

FiniteGroup a5xc6() { return G_::direct_product(G_::alternating(5), G_::cyclic(6)); }
FiniteGroup a5xa5() { return G_::direct_product(G_::alternating(5), G_::alternating(5)); }
}  // namespace

TEST(OPi, Examples) {
  const std::uint64_t two[] = {2}, five[] = {5}, two_three[] = {2, 3};
  EXPECT_EQ(o_pi(G_::symmetric(4), two), G_::klein_four());
  EXPECT_EQ(o_pi(G_::dihedral(8), two), G_::dihedral(8));
  EXPECT_TRUE(o_pi(G_::symmetric(4), std::span<const std::uint64_t>{}).is_trivial());
  EXPECT_TRUE(o_pi(G_::symmetric(4), five).is_trivial());
  EXPECT_EQ(o_pi(G_::symmetric(4), two_three), G_::symmetric(4));
  EXPECT_EQ(o_pi(a5xc6(), two_three).order(), 6u);
}

TEST(OPi, SylowCoreAgreesWithLattice) {
  for (const auto& G : {G_::symmetric(4), G_::special_linear2(3), G_::direct_product(G_::symmetric(4), G_::symmetric(3)),
                        G_::dihedral(12), G_::wreath_product(G_::cyclic(2), G_::cyclic(2))}) {
    for (auto p : {2u, 3u}) {
      FiniteGroup expected = FiniteGroup::trivial(G.degree());
      for (const auto& N : normal_subgroups(G).members)
        if (is_p_group(N, p)) expected = join(expected, N);
      EXPECT_EQ(o_p(G, p), expected);
    }
  }
}

TEST(Fitting, Examples) {
  EXPECT_EQ(fitting_subgroup(G_::symmetric(4)), G_::klein_four());
  EXPECT_EQ(fitting_subgroup(G_::quaternion8()), G_::quaternion8());
  EXPECT_TRUE(fitting_subgroup(G_::alternating(5)).is_trivial());
}

TEST(Quasisimple, Examples) {
  EXPECT_TRUE(is_quasisimple(G_::alternating(5)));
  auto sl25 = G_::special_linear2(5);
  EXPECT_EQ(sl25.degree(), 24u);
  EXPECT_TRUE(is_quasisimple(sl25));
  EXPECT_EQ(center(sl25).order(), 2u);
  EXPECT_FALSE(is_quasisimple(G_::cyclic(6)));
  EXPECT_FALSE(is_quasisimple(G_::special_linear2(3)));
  EXPECT_FALSE(is_quasisimple(a5xa5()));
}

TEST(Components, Examples) {
  auto s5 = components(G_::symmetric(5));
  ASSERT_EQ(s5.size(), 1u);
  EXPECT_EQ(s5[0], G_::alternating(5));
  EXPECT_TRUE(components(G_::symmetric(4)).empty());
  auto aa = components(a5xa5());
  ASSERT_EQ(aa.size(), 2u);
  EXPECT_EQ(join(aa[0], aa[1]).order(), 3600u);
  auto sl = components(G_::special_linear2(5));
  ASSERT_EQ(sl.size(), 1u);
  EXPECT_EQ(sl[0].order(), 120u);
}

TEST(Layer, Examples) {
  EXPECT_EQ(layer(G_::symmetric(5)), G_::alternating(5));
  EXPECT_TRUE(layer(G_::symmetric(4)).is_trivial());
  EXPECT_EQ(layer(a5xc6()).order(), 60u);
}

TEST(GeneralizedFitting, Examples) {
  auto s4 = generalized_fitting(G_::symmetric(4));
  EXPECT_EQ(s4.fstar, G_::klein_four());
  EXPECT_TRUE(s4.layer.is_trivial());
  auto a5 = generalized_fitting(G_::alternating(5));
  EXPECT_TRUE(a5.fitting.is_trivial());
  EXPECT_EQ(a5.fstar.order(), 60u);
  auto one = generalized_fitting(FiniteGroup::trivial());
  EXPECT_TRUE(one.fitting.is_trivial() && one.layer.is_trivial() && one.fstar.is_trivial());
  EXPECT_TRUE(one.center_of_fitting.is_trivial() && one.centralizer_of_fstar.is_trivial());
}

TEST(GeneralizedFitting, CentralProductLaws) {
  for (const auto& G : {a5xa5(), a5xc6(), G_::special_linear2(5), G_::symmetric(5),
                        G_::direct_product(G_::special_linear2(5), G_::cyclic(4))}) {
    auto r = generalized_fitting(G);
    for (std::size_t a = 0; a < r.components.size(); ++a) {
      EXPECT_TRUE(commutator_subgroup(G, r.components[a], r.fitting).is_trivial());
      for (std::size_t b = a + 1; b < r.components.size(); ++b)
        EXPECT_TRUE(commutator_subgroup(G, r.components[a], r.components[b]).is_trivial());
    }
    EXPECT_EQ(r.layer, perfect_residual(r.fstar));
  }
}

TEST(FstarGroup, Examples) {
  EXPECT_TRUE(is_fstar_group(G_::klein_four()));
  EXPECT_TRUE(is_fstar_group(G_::alternating(5)));
  EXPECT_FALSE(is_fstar_group(G_::symmetric(4)));
  EXPECT_TRUE(is_fstar_group(a5xc6()));
  EXPECT_FALSE(is_fstar_group(G_::symmetric(5)));
}

TEST(Dp, Examples) {
  EXPECT_EQ(d_p(G_::symmetric(4), 2), 2u);
  EXPECT_EQ(d_p(G_::symmetric(4), 5), 0u);
  EXPECT_EQ(d_p(G_::elementary_abelian(3, 4), 3), 4u);
  EXPECT_EQ(d_p(G_::cyclic(8), 2), 1u);
  EXPECT_EQ(d_p(G_::quaternion8(), 2), 2u);
}

TEST(LowerRSeries, Examples) {
  auto D8 = G_::dihedral(4);
  auto s = lower_r_series(D8, 2);
  ASSERT_EQ(s.terms.size(), 3u);
  EXPECT_EQ(s.terms[1], center(D8));
  EXPECT_EQ(s.terms[1], frattini(D8));
  EXPECT_TRUE(s.stable.is_trivial());

  auto s3 = lower_r_series(G_::symmetric(3), 2);
  EXPECT_EQ(s3.term(1), G_::alternating(3));
  EXPECT_EQ(s3.stable, G_::alternating(3));

  auto e = lower_r_series(G_::elementary_abelian(2, 3), 2);
  EXPECT_TRUE(e.term(1).is_trivial());
  EXPECT_THROW(lower_r_series(D8, 0), DomainError);
}

TEST(LowerRSeries, FactorsCentralOfExponentDividingR) {
  for (const auto& G : {G_::symmetric(4), G_::special_linear2(3), G_::dihedral(12), G_::quaternion8()})
    for (std::uint64_t r : {2u, 3u, 6u}) {
      auto s = lower_r_series(G, r);
      unsigned bound = 1;
      for (Order n = G.order(); n > 1; n /= 2) ++bound;
      EXPECT_LE(s.terms.size(), bound + 1);
      for (std::size_t k = 0; k + 1 < s.terms.size(); ++k) {
        const auto& A = s.terms[k];
        const auto& B = s.terms[k + 1];
        EXPECT_TRUE(B.contains(commutator_subgroup(G, A, G)));
        for (const auto& a : A.generators()) EXPECT_TRUE(B.contains(a.pow(static_cast<std::int64_t>(r))));
      }
      // G/stable is nilpotent
      EXPECT_TRUE(s.stable.contains(nilpotent_residual(G)));
    }
}

TEST(Tate, Examples) {
  auto S3 = G_::symmetric(3);
  auto t = tate_verify(S3, FiniteGroup({P("(1 2)", 3)}), 2);
  EXPECT_TRUE(t.hypothesis_holds);
  EXPECT_TRUE(t.conclusion_holds);
  auto same = tate_verify(S3, S3, 5);
  EXPECT_TRUE(same.hypothesis_holds && same.conclusion_holds);
  EXPECT_FALSE(tate_verify(S3, G_::alternating(3), 2).hypothesis_holds);
}

TEST(Cor213, Examples) {
  auto c = cor213_verify(G_::symmetric(3), G_::alternating(3), 2);
  EXPECT_TRUE(c.hypothesis_holds && c.conclusion_holds);
  auto one = cor213_verify(G_::symmetric(4), FiniteGroup::trivial(4), 2);
  EXPECT_TRUE(one.hypothesis_holds && one.conclusion_holds);
  EXPECT_FALSE(cor213_verify(G_::symmetric(4), G_::alternating(4), 2).hypothesis_holds);
  EXPECT_THROW(cor213_verify(G_::symmetric(4), FiniteGroup({P("(1 2)", 4)}), 2), DomainError);
}

TEST(TheoremB, Examples) {
  auto s4 = theorem_b_verify(G_::symmetric(4));
  EXPECT_TRUE(s4.equal);
  EXPECT_EQ(s4.lhs, G_::klein_four());
  auto a5 = theorem_b_verify(G_::alternating(5));
  EXPECT_TRUE(a5.equal && a5.lhs.is_trivial());
  auto ab = G_::direct_product(G_::cyclic(4), G_::cyclic(6));
  auto r = theorem_b_verify(ab);
  EXPECT_TRUE(r.equal);
  EXPECT_EQ(r.lhs, ab);
}

TEST(Oracle, Examples) {
  EXPECT_EQ(brute_force_fstar_oracle(G_::symmetric(4)), G_::klein_four());
  EXPECT_EQ(brute_force_fstar_oracle(G_::alternating(5)).order(), 60u);
  EXPECT_TRUE(brute_force_fstar_oracle(FiniteGroup::trivial()).is_trivial());
  EXPECT_THROW(brute_force_fstar_oracle(G_::symmetric(6)), CapExceeded);
}

TEST(Oracle, AgreesWithGeneralizedFitting) {
  std::vector<FiniteGroup> gs{G_::symmetric(5), G_::special_linear2(5), G_::special_linear2(3),
                              G_::direct_product(G_::symmetric(4), G_::symmetric(3)), G_::quaternion8(),
                              G_::direct_product(G_::alternating(5), G_::cyclic(2)), G_::dihedral(10)};
  for (const auto& G : gs) {
    auto o = brute_force_joins(G);
    auto r = generalized_fitting(G);
    EXPECT_EQ(o.fstar, r.fstar) << G.order();
    EXPECT_EQ(o.nilpotent, r.fitting) << G.order();
    EXPECT_EQ(o.quasisimple, r.layer) << G.order();
  }
}
