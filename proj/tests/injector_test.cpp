#include <gtest/gtest.h>

#include "permfit/catalog.hpp"
#include "permfit/injectors.hpp"

using namespace permfit;

namespace {

std::vector<std::uint64_t> orders_of(const SubgroupSet& s) { return s.orders(); }

}  // namespace

TEST(FMaximal, WholeGroupForAll) {
  GroupPtr s4 = builders::symmetric(4);
  SubgroupSet m = f_maximal_subgroups(s4, cls::all());
  ASSERT_EQ(m.size(), 1u);
  EXPECT_EQ(m[0].order(), 24u);
}

TEST(FMaximal, NilpotentMaximalsOfAlternatingFour) {
  SubgroupSet m = f_maximal_subgroups(builders::alternating(4), cls::nilpotent());
  EXPECT_EQ(orders_of(m), (std::vector<std::uint64_t>{3, 3, 3, 3, 4}));
}

TEST(FMaximal, NilpotentMaximalsOfSymmetricFour) {
  SubgroupSet m = f_maximal_subgroups(builders::symmetric(4), cls::nilpotent());
  EXPECT_EQ(orders_of(m), (std::vector<std::uint64_t>{3, 3, 3, 3, 8, 8, 8}));
}

TEST(Oracle, AllClassGivesWholeGroup) {
  GroupPtr g = builders::dihedral(5);
  InjectorReport rep = injectors_oracle(g, cls::all());
  ASSERT_EQ(rep.injectors.size(), 1u);
  EXPECT_EQ(rep.injectors[0].order(), 10u);
  EXPECT_EQ(rep.conjugacy_class_count, 1u);
}

TEST(Oracle, NilpotentInjectorsOfSymmetricFourAreTheSylowTwos) {
  GroupPtr s4 = builders::symmetric(4);
  InjectorReport rep = injectors_oracle(s4, cls::nilpotent());
  EXPECT_EQ(rep.injectors, sylow(s4, 2));
  EXPECT_EQ(rep.conjugacy_class_count, 1u);
}

TEST(Oracle, NegativeControlAlternatingFive) {
  // outside solubility the oracle finds 21 injectors in 3 conjugacy classes
  InjectorReport rep = injectors_oracle(builders::alternating(5), cls::nilpotent());
  EXPECT_EQ(rep.injectors.size(), 21u);
  EXPECT_EQ(rep.conjugacy_class_count, 3u);
  std::size_t n3 = 0, n4 = 0, n5 = 0;
  for (const auto& v : rep.injectors) {
    if (v.order() == 3) ++n3;
    if (v.order() == 4) ++n4;
    if (v.order() == 5) ++n5;
  }
  EXPECT_EQ(n3, 10u);
  EXPECT_EQ(n4, 5u);
  EXPECT_EQ(n5, 6u);
}

TEST(Oracle, InjectorContainsRadicalAndIsMaximal) {
  // Lemma-style sanity on a soluble and a non-soluble example
  for (const auto& g : {builders::symmetric(4), builders::alternating(5)}) {
    ClassExpr C = cls::nilpotent();
    InjectorReport rep = injectors_oracle(g, C);
    Subgroup r = radical(g, C);
    SubgroupSet maximal = f_maximal_subgroups(g, C);
    for (const auto& v : rep.injectors) {
      EXPECT_TRUE(r.members().subset_of(v.members()));
      EXPECT_TRUE(maximal.contains(v.members()));
    }
  }
}

TEST(Hall, KnownFamilies) {
  GroupPtr s3 = builders::symmetric(3);
  SubgroupSet h2 = hall_subgroups(s3, PrimeSet::finite({2}));
  EXPECT_EQ(orders_of(h2), (std::vector<std::uint64_t>{2, 2, 2}));

  SubgroupSet whole = hall_subgroups(s3, PrimeSet::finite({2, 3, 5}));
  ASSERT_EQ(whole.size(), 1u);
  EXPECT_TRUE(whole[0].is_whole());

  // A5 has no subgroup of order 20
  EXPECT_TRUE(hall_subgroups(builders::alternating(5), PrimeSet::finite({2, 5})).empty());
}

TEST(PiNilpotentConstructive, SymmetricFourAtTwo) {
  GroupPtr s4 = builders::symmetric(4);
  InjectorReport rep = pi_nilpotent_injectors_constructive(s4, PrimeSet::finite({2}));
  EXPECT_EQ(rep.injectors, sylow(s4, 2));
  EXPECT_EQ(rep.conjugacy_class_count, 1u);
  ASSERT_TRUE(rep.agreement.has_value());
  EXPECT_TRUE(*rep.agreement);
  ASSERT_EQ(rep.decomposition.size(), 3u);
  EXPECT_EQ(rep.decomposition[0]->radical_part.order(), 1u);  // O_{2'}(S4) = 1
}

TEST(PiNilpotentConstructive, SymmetricThreeFullSupport) {
  GroupPtr s3 = builders::symmetric(3);
  InjectorReport rep = pi_nilpotent_injectors_constructive(s3, PrimeSet::finite({2, 3}));
  ASSERT_EQ(rep.injectors.size(), 1u);
  EXPECT_EQ(rep.injectors[0].order(), 3u);  // the nilpotent injector C3 contains F(S3)
  EXPECT_EQ(rep.conjugacy_class_count, 1u);
  EXPECT_EQ(rep.agreement, std::optional<bool>(true));
}

TEST(PiNilpotentConstructive, TrivialGroup) {
  GroupPtr c1 = builders::cyclic(1);
  InjectorReport rep = pi_nilpotent_injectors_constructive(c1, PrimeSet::finite({2}));
  ASSERT_EQ(rep.injectors.size(), 1u);
  EXPECT_EQ(rep.injectors[0].order(), 1u);
  EXPECT_EQ(rep.conjugacy_class_count, 1u);
}

TEST(PiNilpotentConstructive, RejectsNonPiSoluble) {
  EXPECT_THROW(
      pi_nilpotent_injectors_constructive(builders::alternating(5), PrimeSet::finite({2})),
      HypothesisError);
}

TEST(PNilpotent, SymmetricFourAtTwoAndThree) {
  GroupPtr s4 = builders::symmetric(4);
  InjectorReport at2 = p_nilpotent_injectors(s4, 2);
  EXPECT_EQ(orders_of(at2.injectors), (std::vector<std::uint64_t>{8, 8, 8}));
  EXPECT_EQ(at2.agreement, std::optional<bool>(true));

  InjectorReport at3 = p_nilpotent_injectors(s4, 3);
  ASSERT_EQ(at3.injectors.size(), 1u);
  EXPECT_EQ(at3.injectors[0].order(), 12u);  // O_{3'} * Sylow-3 = V4 * C3 = A4
  EXPECT_EQ(at3.conjugacy_class_count, 1u);
  EXPECT_EQ(at3.agreement, std::optional<bool>(true));
  EXPECT_EQ(at3.decomposition[0]->radical_part.order(), 4u);
  EXPECT_EQ(at3.decomposition[0]->complement_part.order(), 3u);
}

TEST(PNilpotent, PrimeOutsideSigmaGivesWholeGroup) {
  GroupPtr s4 = builders::symmetric(4);
  InjectorReport rep = p_nilpotent_injectors(s4, 5);
  ASSERT_EQ(rep.injectors.size(), 1u);
  EXPECT_TRUE(rep.injectors[0].is_whole());
}

TEST(Hartley, TrivialXReducesToPiNilpotent) {
  for (const auto& label : {"S4", "S3xC5", "SL(2,3)"}) {
    auto cat = default_catalog();
    GroupPtr g = find_entry(cat, label)->group;
    for (const auto& pi : {PrimeSet::finite({2}), PrimeSet::finite({2, 3})}) {
      InjectorReport h = hartley_injectors_constructive(g, cls::trivial(), pi);
      InjectorReport p = pi_nilpotent_injectors_constructive(g, pi);
      EXPECT_EQ(h.injectors, p.injectors) << label << " pi=" << pi.to_string();
      EXPECT_EQ(h.agreement, std::optional<bool>(true));
    }
  }
}

TEST(Hartley, NonSolubleRadicalCase) {
  // A5 x C7 with X the class of {2,3,5}-groups and pi = {7}
  GroupPtr g = builders::direct_product(builders::alternating(5), builders::cyclic(7));
  ClassExpr x = cls::pi_groups(PrimeSet::finite({2, 3, 5}));
  PrimeSet pi = PrimeSet::finite({7});
  InjectorReport rep = hartley_injectors_constructive(g, x, pi);
  ASSERT_EQ(rep.injectors.size(), 1u);
  EXPECT_TRUE(rep.injectors[0].is_whole());
  EXPECT_EQ(rep.conjugacy_class_count, 1u);
  EXPECT_EQ(rep.agreement, std::optional<bool>(true));
  EXPECT_EQ(rep.decomposition[0]->radical_part.order(), 60u);  // G_{X Epi(7')} = A5
}

TEST(Hartley, NilpotentRadicalOnProductGroup) {
  GroupPtr g = builders::direct_product(builders::symmetric(4), builders::cyclic(5));
  InjectorReport rep =
      hartley_injectors_constructive(g, cls::nilpotent(), PrimeSet::finite({2, 3}));
  ASSERT_EQ(rep.injectors.size(), 1u);
  EXPECT_EQ(rep.injectors[0].order(), 60u);  // A4 x C5
  EXPECT_EQ(rep.agreement, std::optional<bool>(true));
  IndexSet recomputed = product_set(*g, rep.decomposition[0]->radical_part.members(),
                                    rep.decomposition[0]->complement_part.members());
  EXPECT_TRUE(recomputed == rep.injectors[0].members());
}

TEST(Hartley, HypothesisChecked) {
  GroupPtr a5 = builders::alternating(5);
  EXPECT_THROW(hartley_injectors_constructive(a5, cls::trivial(), PrimeSet::finite({2})),
               HypothesisError);
  // with X absorbing the non-soluble part the hypothesis holds
  EXPECT_NO_THROW(
      hartley_injectors_constructive(a5, cls::pi_groups(PrimeSet::finite({2, 3, 5})),
                                     PrimeSet::finite({7})));
}

TEST(Iterated, KOneMatchesPiNilpotent) {
  GroupPtr s4 = builders::symmetric(4);
  PrimeSet pi = PrimeSet::finite({2, 3});
  InjectorReport a = iterated_class_injectors(s4, pi, 1);
  InjectorReport b = pi_nilpotent_injectors_constructive(s4, pi);
  EXPECT_EQ(a.injectors, b.injectors);
  EXPECT_EQ(a.class_text, "PiNil({2,3})");
}

TEST(Iterated, SymmetricFourSquaredClassInjector) {
  // S4 has {2,3}-nilpotent length 3 (V4 < A4 < S4), so the square-class
  // injector is A4, not the whole group; the oracle confirms.
  GroupPtr s4 = builders::symmetric(4);
  InjectorReport rep = iterated_class_injectors(s4, PrimeSet::finite({2, 3}), 2);
  ASSERT_EQ(rep.injectors.size(), 1u);
  EXPECT_EQ(rep.injectors[0].order(), 12u);
  EXPECT_EQ(rep.agreement, std::optional<bool>(true));
  EXPECT_EQ(rep.class_text, "prod(PiNil({2,3}),PiNil({2,3}))");

  // at k=3 the chain has closed and the whole group is its own injector
  InjectorReport cube = iterated_class_injectors(s4, PrimeSet::finite({2, 3}), 3);
  ASSERT_EQ(cube.injectors.size(), 1u);
  EXPECT_TRUE(cube.injectors[0].is_whole());
  EXPECT_EQ(cube.agreement, std::optional<bool>(true));
}

TEST(Iterated, NilpotentGroupIsItsOwnInjectorForEveryK) {
  GroupPtr c6 = builders::cyclic(6);
  for (unsigned k : {1u, 2u, 3u}) {
    InjectorReport rep = iterated_class_injectors(c6, PrimeSet::finite({2, 3}), k);
    ASSERT_EQ(rep.injectors.size(), 1u);
    EXPECT_TRUE(rep.injectors[0].is_whole());
  }
  EXPECT_THROW(iterated_class_injectors(c6, PrimeSet::finite({2}), 0),
               std::invalid_argument);
}

TEST(Dispatch, RoutesByClassShape) {
  GroupPtr s4 = builders::symmetric(4);
  // single prime: Sylow route
  InjectorReport single = constructive_injectors(s4, cls::pi_nilpotent(PrimeSet::finite({3})));
  ASSERT_EQ(single.injectors.size(), 1u);
  EXPECT_EQ(single.injectors[0].order(), 12u);
  // multi prime: Hall route
  InjectorReport multi =
      constructive_injectors(s4, cls::pi_nilpotent(PrimeSet::finite({2, 3})));
  EXPECT_EQ(multi.agreement, std::optional<bool>(true));
  // product with a pi-nilpotent right factor: quotient route, agreement against
  // the product class itself
  ClassExpr prod = cls::product(cls::nilpotent(), cls::pi_nilpotent(PrimeSet::finite({2})));
  InjectorReport via_prod = constructive_injectors(s4, prod);
  EXPECT_EQ(via_prod.class_text, prod.to_string());
  EXPECT_EQ(via_prod.agreement, std::optional<bool>(true));
  // no constructive route
  EXPECT_THROW(constructive_injectors(s4, cls::soluble()), DomainError);
}

TEST(LemmaTwoTwo, IntersectionWithNormalSubgroupIsInjector) {
  GroupPtr s4 = builders::symmetric(4);
  ClassExpr C = cls::nilpotent();
  InjectorReport rep = injectors_oracle(s4, C);
  SubgroupSet normals = normal_subgroups(s4);
  for (const auto& V : rep.injectors) {
    for (const auto& K : normals) {
      if (K.is_whole()) continue;
      GroupPtr Kg = K.as_group();
      InjectorReport repK = injectors_oracle(Kg, C);
      IndexSet vk(Kg->order());
      (V.members() & K.members()).for_each([&](std::size_t i) {
        vk.set(*Kg->index_of(s4->element(i)));
      });
      EXPECT_TRUE(repK.injectors.contains(vk)) << "|K|=" << K.order();
    }
  }
}
