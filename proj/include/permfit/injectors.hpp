#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "permfit/class_expr.hpp"
#include "permfit/lattice.hpp"

namespace permfit {

enum class InjectorMethod { Oracle, Constructive };

/// Recorded factorization of a constructively built injector: the injector is
/// the subgroup product radical_part * complement_part.
struct InjectorDecomposition {
  Subgroup radical_part;
  Subgroup complement_part;
};

/// Structured result of an injector computation. `injectors` may be empty for
/// the oracle (existence is a finding, not an error). `agreement` is set when
/// a constructive result was compared against the oracle; std::nullopt means
/// the oracle was out of bounds ("unverified-by-oracle").
struct InjectorReport {
  std::string group_label;
  std::string class_text;
  SubgroupSet injectors;
  std::size_t conjugacy_class_count = 0;
  std::vector<std::optional<InjectorDecomposition>> decomposition;  // parallel to injectors
  InjectorMethod method = InjectorMethod::Oracle;
  std::optional<bool> agreement;
};

/// All C-member subgroups of G that are contained in no strictly larger
/// C-member subgroup.
inline SubgroupSet f_maximal_subgroups(const GroupPtr& G, const ClassExpr& C,
                                       std::size_t bound = PermGroup::kDefaultSubgroupBound) {
  SubgroupSet all = subgroups(G, bound);
  std::vector<IndexSet> members;
  for (const auto& s : all)
    if (member(s, C)) members.push_back(s.members());
  std::vector<IndexSet> maximal;
  for (const auto& m : members) {
    bool is_max = true;
    for (const auto& other : members) {
      if (m.count() < other.count() && m.subset_of(other)) {
        is_max = false;
        break;
      }
    }
    if (is_max) maximal.push_back(m);
  }
  return SubgroupSet(G, std::move(maximal));
}

namespace detail {

/// C-maximal member sets among the subgroups of G contained in K.
inline std::unordered_set<IndexSet, IndexSetHash> c_maximal_within(
    const GroupPtr& G, const std::vector<IndexSet>& lattice, const IndexSet& K,
    const ClassExpr& C) {
  std::vector<IndexSet> members;
  for (const auto& s : lattice)
    if (s.subset_of(K) && member(Subgroup(G, s), C)) members.push_back(s);
  std::unordered_set<IndexSet, IndexSetHash> maximal;
  for (const auto& m : members) {
    bool is_max = true;
    for (const auto& other : members) {
      if (m.count() < other.count() && m.subset_of(other)) {
        is_max = false;
        break;
      }
    }
    if (is_max) maximal.insert(m);
  }
  return maximal;
}

}  // namespace detail

/// Definition-faithful injector oracle: the subgroups V such that V cap K is
/// C-maximal in K for every subnormal K of G. Exhaustive over the subgroup
/// lattice; the reference everything constructive is checked against.
inline InjectorReport injectors_oracle(const GroupPtr& G, const ClassExpr& C,
                                       std::size_t bound = PermGroup::kDefaultSubgroupBound) {
  SubgroupSet all = subgroups(G, bound);
  const std::vector<IndexSet>& lattice = detail::cached_lattice(*G);
  const std::vector<IndexSet>& subnormals = detail::cached_subnormals(*G);

  // candidates must already be C-maximal in G itself
  auto cmax_full = detail::c_maximal_within(G, lattice, G->full_set(), C);
  std::vector<IndexSet> candidates(cmax_full.begin(), cmax_full.end());

  std::vector<IndexSet> result;
  for (const auto& V : candidates) {
    bool ok = true;
    for (const auto& K : subnormals) {
      if (K.count() == G->order()) continue;  // handled by candidate selection
      auto cmax = detail::c_maximal_within(G, lattice, K, C);
      if (!cmax.count(V & K)) {
        ok = false;
        break;
      }
    }
    if (ok) result.push_back(V);
  }

  InjectorReport report;
  report.group_label = G->label();
  report.class_text = C.to_string();
  report.injectors = SubgroupSet(G, std::move(result));
  report.conjugacy_class_count = conjugacy_class_count(report.injectors);
  report.decomposition.assign(report.injectors.size(), std::nullopt);
  report.method = InjectorMethod::Oracle;
  return report;
}

/// All subgroups whose order is the full pi-part of |G|. May be empty.
inline SubgroupSet hall_subgroups(const GroupPtr& G, const PrimeSet& pi,
                                  std::size_t bound = PermGroup::kDefaultSubgroupBound) {
  return subgroups_of_order(G, pi_part(G->order(), pi), bound);
}

namespace detail {

inline std::optional<bool> oracle_agreement(const GroupPtr& G, const ClassExpr& C,
                                            const SubgroupSet& constructive,
                                            std::size_t bound) {
  if (G->order() > bound) return std::nullopt;
  InjectorReport oracle = injectors_oracle(G, C, bound);
  return oracle.injectors == constructive;
}

/// Map a subgroup of a materialized group back into parent index space.
inline IndexSet lift_to_parent(const GroupPtr& parent, const GroupPtr& sub,
                               const IndexSet& members) {
  if (parent == sub) return members;
  IndexSet out(parent->order());
  members.for_each([&](std::size_t i) { out.set(*parent->index_of(sub->element(i))); });
  return out;
}

}  // namespace detail

/// pi-nilpotent injectors of a pi-soluble group, built as the product of the
/// pi'-radical with an NilPi(pi)-injector of a Hall pi-subgroup. Every
/// (Hall subgroup, injector) combination is enumerated and the deduplicated
/// set is compared against the oracle when the order permits.
inline InjectorReport pi_nilpotent_injectors_constructive(
    const GroupPtr& G, const PrimeSet& pi,
    std::size_t bound = PermGroup::kDefaultSubgroupBound) {
  if (!member(G, cls::pi_soluble(pi)))
    throw HypothesisError("pi-nilpotent injectors: group " + G->label() + " is not " +
                          pi.to_string() + "-soluble");

  Subgroup pip_radical = radical(G, cls::pi_groups(pi.complement()));
  SubgroupSet halls = hall_subgroups(G, pi, bound);
  ClassExpr npi = cls::nilpotent_pi(pi);

  std::vector<IndexSet> result;
  std::unordered_map<IndexSet, InjectorDecomposition, IndexSetHash> decomp;
  for (const auto& hall : halls) {
    GroupPtr Hg = hall.as_group();
    InjectorReport inner = injectors_oracle(Hg, npi, bound);
    for (const auto& W : inner.injectors) {
      IndexSet w_parent = detail::lift_to_parent(G, Hg, W.members());
      IndexSet V = product_set(*G, pip_radical.members(), w_parent);
      if (decomp.emplace(V, InjectorDecomposition{pip_radical, Subgroup(G, w_parent)}).second)
        result.push_back(V);
    }
  }

  InjectorReport report;
  report.group_label = G->label();
  report.class_text = cls::pi_nilpotent(pi).to_string();
  report.injectors = SubgroupSet(G, std::move(result));
  report.conjugacy_class_count = conjugacy_class_count(report.injectors);
  for (const auto& inj : report.injectors)
    report.decomposition.push_back(decomp.at(inj.members()));
  report.method = InjectorMethod::Constructive;
  report.agreement =
      detail::oracle_agreement(G, cls::pi_nilpotent(pi), report.injectors, bound);
  return report;
}

/// p-nilpotent injectors of a p-soluble group: the products of the p'-radical
/// with the Sylow p-subgroups. Each result is verified to be a maximal
/// p-nilpotent subgroup containing the p-nilpotent radical.
inline InjectorReport p_nilpotent_injectors(const GroupPtr& G, unsigned p,
                                            std::size_t bound = PermGroup::kDefaultSubgroupBound) {
  PrimeSet pi = PrimeSet::finite({p});
  if (!member(G, cls::pi_soluble(pi)))
    throw HypothesisError("p-nilpotent injectors: group " + G->label() + " is not " +
                          std::to_string(p) + "-soluble");

  Subgroup pp_radical = radical(G, cls::pi_groups(pi.complement()));
  SubgroupSet sylows = sylow(G, p, bound);
  ClassExpr pnil = cls::pi_nilpotent(pi);

  std::vector<IndexSet> result;
  std::unordered_map<IndexSet, InjectorDecomposition, IndexSetHash> decomp;
  for (const auto& P : sylows) {
    IndexSet V = product_set(*G, pp_radical.members(), P.members());
    if (decomp.emplace(V, InjectorDecomposition{pp_radical, P}).second)
      result.push_back(V);
  }

  InjectorReport report;
  report.group_label = G->label();
  report.class_text = pnil.to_string();
  report.injectors = SubgroupSet(G, std::move(result));
  report.conjugacy_class_count = conjugacy_class_count(report.injectors);
  for (const auto& inj : report.injectors)
    report.decomposition.push_back(decomp.at(inj.members()));
  report.method = InjectorMethod::Constructive;

  // maximal p-nilpotent subgroup containing the p-nilpotent radical
  Subgroup pnil_radical = radical(G, pnil);
  SubgroupSet maximal = f_maximal_subgroups(G, pnil, bound);
  for (const auto& inj : report.injectors) {
    if (!pnil_radical.members().subset_of(inj.members()))
      throw std::logic_error("p-nilpotent injector misses the p-nilpotent radical");
    if (!maximal.contains(inj.members()))
      throw std::logic_error("p-nilpotent injector is not a maximal p-nilpotent subgroup");
  }

  report.agreement = detail::oracle_agreement(G, pnil, report.injectors, bound);
  return report;
}

/// Injectors for the class hartley(X;pi) on groups with G/G_X pi-soluble.
/// Two equivalent assemblies are computed and compared:
///   (a) preimages of the pi-nilpotent injectors of G/G_X,
///   (b) radical(G, prod(X, Epi(pi'))) * L with L the preimage of the
///       NilPi(pi)-injector of a Hall pi-subgroup of G/G_X.
/// The recorded decomposition is (b)'s factorization.
inline InjectorReport hartley_injectors_constructive(
    const GroupPtr& G, const ClassExpr& X, const PrimeSet& pi,
    std::size_t bound = PermGroup::kDefaultSubgroupBound) {
  if (!member(G, cls::product(X, cls::pi_soluble(pi))))
    throw HypothesisError("hartley injectors: group " + G->label() +
                          " does not satisfy the hypothesis " +
                          cls::product(X, cls::pi_soluble(pi)).to_string());

  Subgroup x_radical = radical(G, X);
  Quotient q = quotient(G, x_radical);
  InjectorReport inner = pi_nilpotent_injectors_constructive(q.group, pi, bound);

  Subgroup xep_radical = radical(G, cls::product(X, cls::pi_groups(pi.complement())));

  std::vector<IndexSet> result;
  std::unordered_map<IndexSet, InjectorDecomposition, IndexSetHash> decomp;
  for (std::size_t i = 0; i < inner.injectors.size(); ++i) {
    IndexSet via_preimage = pull_back(q, inner.injectors[i].members());
    IndexSet L = pull_back(q, inner.decomposition[i]->complement_part.members());
    IndexSet via_product = product_set(*G, xep_radical.members(), L);
    if (!(via_preimage == via_product))
      throw std::logic_error("hartley injector assemblies disagree");
    if (decomp.emplace(via_preimage, InjectorDecomposition{xep_radical, Subgroup(G, L)})
            .second)
      result.push_back(via_preimage);
  }

  InjectorReport report;
  report.group_label = G->label();
  report.class_text = cls::hartley(X, pi).to_string();
  report.injectors = SubgroupSet(G, std::move(result));
  report.conjugacy_class_count = conjugacy_class_count(report.injectors);
  for (const auto& inj : report.injectors)
    report.decomposition.push_back(decomp.at(inj.members()));
  report.method = InjectorMethod::Constructive;
  if (report.conjugacy_class_count != 1)
    throw std::logic_error("hartley injectors do not form a single conjugacy class");
  report.agreement =
      detail::oracle_agreement(G, cls::hartley(X, pi), report.injectors, bound);
  return report;
}

/// The k-fold product PiNil(pi) * ... * PiNil(pi), left associated.
inline ClassExpr pi_nilpotent_power(const PrimeSet& pi, unsigned k) {
  if (k == 0) throw std::invalid_argument("pi-nilpotent power: k must be >= 1");
  ClassExpr e = cls::pi_nilpotent(pi);
  for (unsigned i = 1; i < k; ++i) e = cls::product(std::move(e), cls::pi_nilpotent(pi));
  return e;
}

/// Injectors for bounded pi-nilpotent length: the class PiNil(pi)^k, realized
/// as hartley(PiNil(pi)^(k-1); pi). k = 1 is exactly the pi-nilpotent case.
/// Agreement is recomputed against the oracle for the product class itself.
inline InjectorReport iterated_class_injectors(const GroupPtr& G, const PrimeSet& pi,
                                               unsigned k,
                                               std::size_t bound = PermGroup::kDefaultSubgroupBound) {
  if (k == 0) throw std::invalid_argument("iterated injectors: k must be >= 1");
  if (!member(G, cls::pi_soluble(pi)))
    throw HypothesisError("iterated injectors: group " + G->label() + " is not " +
                          pi.to_string() + "-soluble");
  InjectorReport report =
      k == 1 ? pi_nilpotent_injectors_constructive(G, pi, bound)
             : hartley_injectors_constructive(G, pi_nilpotent_power(pi, k - 1), pi, bound);
  ClassExpr power = pi_nilpotent_power(pi, k);
  report.class_text = power.to_string();
  report.agreement = detail::oracle_agreement(G, power, report.injectors, bound);
  return report;
}

/// Dispatch a class expression to its constructive builder:
/// PiNil({p}) -> Sylow-based, PiNil(P) -> Hall-based, hartley(X;P) and
/// prod(X,PiNil(P)) -> the quotient construction. Anything else has no
/// constructive route in this engine.
inline InjectorReport constructive_injectors(const GroupPtr& G, const ClassExpr& C,
                                             std::size_t bound = PermGroup::kDefaultSubgroupBound) {
  using Kind = ClassExpr::Kind;
  if (C.kind() == Kind::PiNilpotent) {
    const PrimeSet& pi = C.primes();
    if (pi.is_finite() && pi.listed().size() == 1)
      return p_nilpotent_injectors(G, pi.listed()[0], bound);
    return pi_nilpotent_injectors_constructive(G, pi, bound);
  }
  if (C.kind() == Kind::Hartley)
    return hartley_injectors_constructive(G, C.children()[0], C.primes(), bound);
  if (C.kind() == Kind::Product && C.children()[1].kind() == Kind::PiNilpotent) {
    InjectorReport report =
        hartley_injectors_constructive(G, C.children()[0], C.children()[1].primes(), bound);
    report.class_text = C.to_string();
    report.agreement = detail::oracle_agreement(G, C, report.injectors, bound);
    return report;
  }
  throw DomainError("no constructive builder for class '" + C.to_string() + "'");
}

}  // namespace permfit
