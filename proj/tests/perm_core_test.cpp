#include <gtest/gtest.h>

#include <set>

#include "naive_oracle.hpp"
#include "permfit/catalog.hpp"
#include "permfit/lattice.hpp"
#include "permfit/perm.hpp"
#include "permfit/perm_group.hpp"

using namespace permfit;

namespace {

Permutation cyc(unsigned degree, std::vector<std::vector<unsigned>> cycles) {
  return Permutation::from_cycles(degree, cycles);
}

Subgroup subgroup_of(const GroupPtr& G, const std::vector<Permutation>& perms) {
  std::vector<std::size_t> idx;
  for (const auto& p : perms) {
    auto i = G->index_of(p);
    EXPECT_TRUE(i.has_value());
    idx.push_back(*i);
  }
  return Subgroup(G, generated_subgroup(*G, idx));
}

std::set<std::vector<naive::Image>> library_subgroups_as_images(const GroupPtr& G) {
  std::set<std::vector<naive::Image>> out;
  SubgroupSet all = subgroups(G);
  for (const auto& s : all) {
    std::vector<naive::Image> imgs;
    for (const auto& p : s.element_perms()) imgs.push_back(p.images());
    std::sort(imgs.begin(), imgs.end());
    out.insert(imgs);
  }
  return out;
}

std::set<std::vector<naive::Image>> naive_subgroups(const GroupPtr& G) {
  std::vector<naive::Image> elems;
  for (const auto& p : G->elements()) elems.push_back(p.images());
  return naive::all_subgroups(elems, G->degree());
}

}  // namespace

TEST(Permutation, ComposeConventionAndInverse) {
  Permutation a = cyc(3, {{0, 1, 2}});
  Permutation b = cyc(3, {{0, 1}});
  // apply a first: 0 ->a 1 ->b 0
  EXPECT_EQ(a.then(b)[0], 0u);
  EXPECT_EQ(a.then(b)[2], 1u);
  EXPECT_TRUE(a.then(a.inverse()).is_identity());
  EXPECT_EQ(a.order(), 3u);
  EXPECT_EQ(cyc(6, {{0, 1}, {2, 3, 4}}).order(), 6u);
}

TEST(Permutation, Validation) {
  EXPECT_THROW(Permutation(std::vector<unsigned>{0, 0, 2}), std::invalid_argument);
  EXPECT_THROW(Permutation(std::vector<unsigned>{0, 5}), std::invalid_argument);
  EXPECT_THROW(cyc(3, {{0, 1}, {1, 2}}), std::invalid_argument);  // repeated point
  EXPECT_THROW(cyc(3, {{3}}), std::invalid_argument);             // out of range
}

TEST(Permutation, CycleString) {
  EXPECT_EQ(cyc(5, {{0, 1, 2}, {3, 4}}).to_cycle_string(), "(1 2 3)(4 5)");
  EXPECT_EQ(Permutation::identity(4).to_cycle_string(), "()");
}

TEST(GroupFromGenerators, SymmetricGroupOnThreePoints) {
  GroupPtr g = PermGroup::from_generators(3, {cyc(3, {{0, 1, 2}}), cyc(3, {{0, 1}})});
  EXPECT_EQ(g->order(), 6u);
  EXPECT_EQ(g->prime_support(), (std::vector<unsigned>{2, 3}));
}

TEST(GroupFromGenerators, TrivialGroup) {
  GroupPtr g = PermGroup::from_generators(1, {});
  EXPECT_EQ(g->order(), 1u);
  EXPECT_TRUE(g->element(0).is_identity());
}

TEST(GroupFromGenerators, ClosureOfAlternatingFiveGenerators) {
  GroupPtr g =
      PermGroup::from_generators(5, {cyc(5, {{0, 1, 2, 3, 4}}), cyc(5, {{0, 1, 2}})});
  EXPECT_EQ(g->order(), 60u);
}

TEST(GroupFromGenerators, Errors) {
  EXPECT_THROW(PermGroup::from_generators(0, {}), std::invalid_argument);
  EXPECT_THROW(PermGroup::from_generators(3, {cyc(4, {{0, 1}})}), std::invalid_argument);
  try {
    PermGroup::from_generators(5, {cyc(5, {{0, 1, 2, 3, 4}}), cyc(5, {{0, 1}})}, "", 100);
    FAIL() << "expected BoundExceeded";
  } catch (const BoundExceeded& e) {
    EXPECT_EQ(e.bound(), 100u);
    EXPECT_NE(std::string(e.what()).find("100"), std::string::npos);
  }
}

TEST(SubgroupEnumeration, CountsMatchNaiveOracle) {
  // frozen counts, cross-checked against the independent subset-closure oracle
  GroupPtr c6 = builders::cyclic(6);
  GroupPtr s4 = builders::symmetric(4);
  GroupPtr q8 = builders::quaternion();
  EXPECT_EQ(subgroups(c6).size(), 4u);
  EXPECT_EQ(subgroups(s4).size(), 30u);
  EXPECT_EQ(subgroups(q8).size(), 6u);
  for (const auto& g : {c6, s4, q8}) {
    EXPECT_EQ(library_subgroups_as_images(g), naive_subgroups(g)) << g->label();
  }
}

TEST(SubgroupEnumeration, MatchesNaiveOracleOnSmallCatalog) {
  for (const auto& entry : default_catalog()) {
    if (entry.group->order() > 24) continue;
    EXPECT_EQ(library_subgroups_as_images(entry.group), naive_subgroups(entry.group))
        << entry.label;
  }
}

TEST(SubgroupEnumeration, BoundExceededNamesTheBound) {
  GroupPtr big = builders::direct_product(builders::alternating(5), builders::cyclic(7));
  try {
    subgroups(big, 100);
    FAIL() << "expected BoundExceeded";
  } catch (const BoundExceeded& e) {
    EXPECT_NE(std::string(e.what()).find("100"), std::string::npos);
  }
}

TEST(NormalSubgroups, SymmetricFour) {
  GroupPtr s4 = builders::symmetric(4);
  SubgroupSet normals = normal_subgroups(s4);
  ASSERT_EQ(normals.size(), 4u);
  EXPECT_EQ(normals.orders(), (std::vector<std::uint64_t>{1, 4, 12, 24}));
}

TEST(NormalSubgroups, AlternatingFiveIsSimple) {
  SubgroupSet normals = normal_subgroups(builders::alternating(5));
  ASSERT_EQ(normals.size(), 2u);
  EXPECT_EQ(normals.orders(), (std::vector<std::uint64_t>{1, 60}));
}

TEST(NormalSubgroups, WholeAndTrivialAlwaysNormal) {
  for (const auto& entry : default_catalog()) {
    if (entry.group->order() > 130) continue;
    const GroupPtr& g = entry.group;
    EXPECT_TRUE(is_normal(Subgroup(g, g->full_set()))) << entry.label;
    EXPECT_TRUE(is_normal(Subgroup(g, g->trivial_set()))) << entry.label;
  }
}

TEST(NormalSubgroups, AgreesWithLatticeFilter) {
  for (const auto& entry : default_catalog()) {
    if (entry.group->order() > 60) continue;
    std::vector<IndexSet> filtered;
    SubgroupSet all = subgroups(entry.group);
    for (const auto& s : all)
      if (is_normal(s)) filtered.push_back(s.members());
    SubgroupSet direct = normal_subgroups(entry.group);
    EXPECT_EQ(SubgroupSet(entry.group, filtered), direct) << entry.label;
  }
}

TEST(Subnormality, TranspositionInSymmetricFourIsNot) {
  GroupPtr s4 = builders::symmetric(4);
  EXPECT_FALSE(is_subnormal(subgroup_of(s4, {cyc(4, {{0, 1}})})));
  EXPECT_TRUE(is_subnormal(subgroup_of(s4, {cyc(4, {{0, 1}, {2, 3}})})));  // inside V4
  for (const auto& n : normal_subgroups(s4)) EXPECT_TRUE(is_subnormal(n));
}

TEST(Subnormality, ExactSubnormalLatticeOfSymmetricFour) {
  // 1, the three double-transposition C2s, V4, A4, S4
  GroupPtr s4 = builders::symmetric(4);
  std::vector<std::uint64_t> subnormal_orders;
  SubgroupSet all = subgroups(s4);
  for (const auto& s : all)
    if (is_subnormal(s)) subnormal_orders.push_back(s.order());
  EXPECT_EQ(subnormal_orders, (std::vector<std::uint64_t>{1, 2, 2, 2, 4, 12, 24}));
}

TEST(Quotient, SymmetricFourByKleinFour) {
  GroupPtr s4 = builders::symmetric(4);
  Subgroup v4 = subgroup_of(s4, {cyc(4, {{0, 1}, {2, 3}}), cyc(4, {{0, 2}, {1, 3}})});
  Quotient q = quotient(s4, v4);
  EXPECT_EQ(q.group->order(), 6u);
  EXPECT_FALSE(q.group->is_abelian());
  // projection is a homomorphism
  for (std::size_t i = 0; i < 24; i += 5)
    for (std::size_t j = 0; j < 24; j += 7)
      EXPECT_EQ(q.proj[s4->mult(i, j)], q.group->mult(q.proj[i], q.proj[j]));
}

TEST(Quotient, ByTrivialAndByWhole) {
  GroupPtr s3 = builders::symmetric(3);
  Quotient by_triv = quotient(s3, Subgroup(s3, s3->trivial_set()));
  EXPECT_EQ(by_triv.group->order(), s3->order());
  Quotient by_whole = quotient(s3, Subgroup(s3, s3->full_set()));
  EXPECT_EQ(by_whole.group->order(), 1u);
}

TEST(Quotient, OrderMultiplicativityAcrossCatalog) {
  for (const auto& entry : default_catalog()) {
    if (entry.group->order() > 130) continue;
    for (const auto& n : normal_subgroups(entry.group)) {
      Quotient q = quotient(entry.group, n);
      EXPECT_EQ(q.group->order() * n.order(), entry.group->order()) << entry.label;
    }
  }
}

TEST(Quotient, RejectsNonNormal) {
  GroupPtr s4 = builders::symmetric(4);
  EXPECT_THROW(quotient(s4, subgroup_of(s4, {cyc(4, {{0, 1}})})), DomainError);
}

TEST(CentralizerNormalizer, KnownValues) {
  GroupPtr s4 = builders::symmetric(4);
  EXPECT_EQ(centralizer(Subgroup(s4, s4->trivial_set())).order(), 24u);
  Subgroup v4 = subgroup_of(s4, {cyc(4, {{0, 1}, {2, 3}}), cyc(4, {{0, 2}, {1, 3}})});
  EXPECT_EQ(centralizer(v4).members(), v4.members());
  Subgroup syl2 = sylow(s4, 2)[0];
  EXPECT_EQ(normalizer(syl2).members(), syl2.members());
  EXPECT_TRUE(centralizer(v4).members().subset_of(normalizer(v4).members()));
}

TEST(Conjugacy, WitnessAndClasses) {
  GroupPtr s4 = builders::symmetric(4);
  SubgroupSet syl = sylow(s4, 2);
  ASSERT_EQ(syl.size(), 3u);
  EXPECT_EQ(syl[0].order(), 8u);
  auto classes = conjugacy_classes(syl);
  ASSERT_EQ(classes.size(), 1u);
  EXPECT_EQ(classes[0].size(), 3u);

  // self-conjugacy yields the identity witness
  auto self = are_conjugate(syl[0], syl[0]);
  ASSERT_TRUE(self.has_value());
  EXPECT_TRUE(self->is_identity());

  // conjugation by the witness maps H exactly onto K
  auto w = are_conjugate(syl[0], syl[1]);
  ASSERT_TRUE(w.has_value());
  std::size_t g = *s4->index_of(*w);
  EXPECT_EQ(conjugate_set(*s4, syl[0].members(), g), syl[1].members());

  // V4 and a non-normal order-4 subgroup of S4 have different cycle types
  Subgroup v4 = subgroup_of(s4, {cyc(4, {{0, 1}, {2, 3}}), cyc(4, {{0, 2}, {1, 3}})});
  Subgroup other = subgroup_of(s4, {cyc(4, {{0, 1}}), cyc(4, {{2, 3}})});
  ASSERT_EQ(other.order(), 4u);
  EXPECT_FALSE(are_conjugate(v4, other).has_value());
}

TEST(Conjugacy, PartitionIsExact) {
  GroupPtr a5 = builders::alternating(5);
  SubgroupSet all = subgroups(a5);
  auto classes = conjugacy_classes(all);
  std::vector<bool> seen(all.size(), false);
  std::size_t total = 0;
  for (const auto& cls : classes)
    for (std::size_t i : cls) {
      EXPECT_FALSE(seen[i]);
      seen[i] = true;
      ++total;
    }
  EXPECT_EQ(total, all.size());
}

TEST(Sylow, FamiliesAndEdgeCases) {
  GroupPtr s4 = builders::symmetric(4);
  EXPECT_EQ(sylow(s4, 2).size(), 3u);
  EXPECT_EQ(sylow(s4, 3).size(), 4u);
  SubgroupSet syl5 = sylow(s4, 5);  // p does not divide the order
  ASSERT_EQ(syl5.size(), 1u);
  EXPECT_EQ(syl5[0].order(), 1u);
  EXPECT_THROW(sylow(s4, 6), std::invalid_argument);

  EXPECT_TRUE(subgroups_of_order(builders::alternating(5), 20).empty());
}

TEST(Sylow, ExistenceAndConjugacyAcrossCatalog) {
  for (const auto& entry : default_catalog()) {
    for (unsigned p : entry.group->prime_support()) {
      SubgroupSet syl = sylow(entry.group, p);
      ASSERT_FALSE(syl.empty()) << entry.label << " p=" << p;
      EXPECT_EQ(syl[0].order(), p_part(entry.group->order(), p));
      EXPECT_EQ(conjugacy_class_count(syl), 1u) << entry.label << " p=" << p;
    }
  }
}

TEST(SubgroupSet, DeterministicCanonicalOrder) {
  GroupPtr s4 = builders::symmetric(4);
  SubgroupSet a = subgroups(s4);
  SubgroupSet b = subgroups(s4);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_TRUE(a[i].members() == b[i].members());
  for (std::size_t i = 1; i < a.size(); ++i) EXPECT_LE(a[i - 1].order(), a[i].order());
}

TEST(Lagrange, HoldsForEveryCatalogSubgroup) {
  for (const auto& entry : default_catalog()) {
    SubgroupSet all = subgroups(entry.group);
    for (const auto& s : all)
      EXPECT_EQ(entry.group->order() % s.order(), 0u) << entry.label;
  }
}
