// Acceptance suite: one test per criterion, each printing a pass/fail line.
// Everything here is oracle-equivalence or property-based at fixed tolerances
// (exact equality throughout; runtimes are wall-clock budgets).

#include <gtest/gtest.h>

#include <chrono>
#include <iostream>

#include "naive_oracle.hpp"
#include "permfit/permfit.hpp"

using namespace permfit;

namespace {

class Criterion {
public:
  Criterion(int number, std::string name) : number_(number), name_(std::move(name)) {
    start_ = std::chrono::steady_clock::now();
  }

  double elapsed_seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

  void finish(bool ok) const {
    std::cout << "[acceptance] criterion " << number_ << " (" << name_ << "): "
              << (ok ? "PASS" : "FAIL") << " in " << elapsed_seconds() << "s" << std::endl;
  }

private:
  int number_;
  std::string name_;
  std::chrono::steady_clock::time_point start_;
};

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> cat = default_catalog();
  return cat;
}

std::size_t count_failures(const SuiteResult& res) { return res.failed; }

GroupPtr group(const std::string& label) {
  const CatalogEntry* e = find_entry(catalog(), label);
  EXPECT_NE(e, nullptr) << label;
  return e->group;
}

}  // namespace

TEST(Acceptance, Criterion1_EngineSanity) {
  Criterion c(1, "engine sanity: naive subgroup oracle + Sylow existence/conjugacy");

  // frozen counts from the independent subset-closure enumeration
  struct Expected {
    const char* label;
    std::size_t count;
  } expected[] = {{"S4", 30}, {"Q8", 6}, {"C6", 4}};
  for (const auto& [label, count] : expected) {
    GroupPtr g = group(label);
    SubgroupSet lib = subgroups(g);
    EXPECT_EQ(lib.size(), count) << label;

    std::vector<naive::Image> elems;
    for (const auto& p : g->elements()) elems.push_back(p.images());
    auto brute = naive::all_subgroups(elems, g->degree());
    EXPECT_EQ(brute.size(), count) << label;

    std::set<std::vector<naive::Image>> lib_sets;
    for (const auto& s : lib) {
      std::vector<naive::Image> imgs;
      for (const auto& p : s.element_perms()) imgs.push_back(p.images());
      std::sort(imgs.begin(), imgs.end());
      lib_sets.insert(imgs);
    }
    EXPECT_EQ(lib_sets, brute) << label;
  }

  // Sylow existence and conjugacy over the whole catalog
  for (const auto& e : catalog()) {
    for (unsigned p : e.group->prime_support()) {
      SubgroupSet syl = sylow(e.group, p);
      EXPECT_FALSE(syl.empty()) << e.label << " p=" << p;
      EXPECT_EQ(syl[0].order(), p_part(e.group->order(), p)) << e.label << " p=" << p;
      EXPECT_EQ(conjugacy_class_count(syl), 1u) << e.label << " p=" << p;
    }
  }

  EXPECT_LT(c.elapsed_seconds(), 10.0);
  c.finish(!HasFailure());
}

TEST(Acceptance, Criterion2_TheoremOneOneSuite) {
  Criterion c(2, "soluble groups: oracle injectors exist, one conjugacy class");
  SuiteResult res = run_suite("thm-1.1", catalog(), VerifyConfig::defaults());
  EXPECT_EQ(count_failures(res), 0u);
  std::size_t soluble_passes = 0;
  for (const auto& rec : res.records) {
    if (rec.status == GroupRecord::Status::Pass) ++soluble_passes;
    if (rec.status == GroupRecord::Status::Skipped) {
      EXPECT_NE(rec.details.find("not soluble"), std::string::npos) << rec.label;
    }
  }
  EXPECT_GE(soluble_passes, 20u);  // the catalog carries ~20 soluble groups
  EXPECT_LT(c.elapsed_seconds(), 300.0);
  c.finish(!HasFailure());
}

TEST(Acceptance, Criterion3_ConstructiveNilpotentInjectors) {
  Criterion c(3, "constructive pi-/p-nilpotent injectors equal the oracle sets");
  VerifyConfig cfg = VerifyConfig::defaults();
  EXPECT_EQ(count_failures(run_suite("lem-3.1", catalog(), cfg)), 0u);
  EXPECT_EQ(count_failures(run_suite("cor-3.2", catalog(), cfg)), 0u);

  // S4 at p=3: the single injector of order 12
  InjectorReport rep = p_nilpotent_injectors(group("S4"), 3);
  EXPECT_EQ(rep.injectors.size(), 1u);
  EXPECT_EQ(rep.injectors[0].order(), 12u);
  EXPECT_EQ(rep.agreement, std::optional<bool>(true));

  EXPECT_LT(c.elapsed_seconds(), 300.0);
  c.finish(!HasFailure());
}

TEST(Acceptance, Criterion4_HartleyInjectorSuite) {
  Criterion c(4, "hartley(X;pi) constructive = oracle with verified decomposition");
  SuiteResult res = run_suite("thm-1.5", catalog(), VerifyConfig::defaults());
  EXPECT_EQ(count_failures(res), 0u);

  // the non-soluble flagship case: A5 x C7, X = Epi({2,3,5}), pi = {7}
  GroupPtr big = group("A5xC7");
  ClassExpr x = cls::pi_groups(PrimeSet::finite({2, 3, 5}));
  InjectorReport rep = hartley_injectors_constructive(big, x, PrimeSet::finite({7}));
  EXPECT_EQ(rep.injectors.size(), 1u);
  EXPECT_TRUE(rep.injectors[0].is_whole());
  EXPECT_EQ(rep.conjugacy_class_count, 1u);
  EXPECT_EQ(rep.agreement, std::optional<bool>(true));
  ASSERT_EQ(rep.decomposition.size(), 1u);
  ASSERT_TRUE(rep.decomposition[0].has_value());
  IndexSet recomputed = product_set(*big, rep.decomposition[0]->radical_part.members(),
                                    rep.decomposition[0]->complement_part.members());
  EXPECT_TRUE(recomputed == rep.injectors[0].members());

  c.finish(!HasFailure());
}

TEST(Acceptance, Criterion5_MembershipEquivalence) {
  Criterion c(5, "hartley(X;pi) membership equals prod(X,PiNil(pi)) on every group");
  SuiteResult res = run_suite("cor-1.5.1", catalog(), VerifyConfig::defaults());
  EXPECT_EQ(count_failures(res), 0u);
  for (const auto& rec : res.records)
    EXPECT_EQ(rec.status, GroupRecord::Status::Pass) << rec.label;  // 100% coverage
  c.finish(!HasFailure());
}

TEST(Acceptance, Criterion6_LemmaSuites) {
  Criterion c(6, "lemma suites 2.1/2.2/2.3/2.4/3.4 with exhaustive Hall containment");
  VerifyConfig cfg = VerifyConfig::defaults();
  for (const char* id : {"lem-2.1", "lem-2.2", "lem-2.3", "lem-2.4", "lem-3.4"})
    EXPECT_EQ(count_failures(run_suite(id, catalog(), cfg)), 0u) << id;
  c.finish(!HasFailure());
}

TEST(Acceptance, Criterion7_NegativeControl) {
  Criterion c(7, "A5 nilpotent injectors: 21 subgroups in 3 conjugacy classes");
  InjectorReport rep = injectors_oracle(group("A5"), cls::nilpotent());
  EXPECT_EQ(rep.injectors.size(), 21u);
  EXPECT_EQ(rep.conjugacy_class_count, 3u);
  c.finish(!HasFailure());
}

TEST(Acceptance, Criterion8_Determinism) {
  Criterion c(8, "two full verify runs produce byte-identical JSON reports");
  VerifyConfig cfg = VerifyConfig::defaults();
  // fresh catalogs: byte-stability must not depend on warm caches
  std::string first = report_json_text(run_all(default_catalog(), cfg), cfg);
  std::string second = report_json_text(run_all(default_catalog(), cfg), cfg);
  EXPECT_EQ(first, second);
  EXPECT_FALSE(first.empty());
  c.finish(!HasFailure());
}
