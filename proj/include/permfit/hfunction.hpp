#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "permfit/class_expr.hpp"

namespace permfit {

/// Hartley-function data: a map from primes to classes with the given
/// support. Cofinite support requires the invariable form (a single value
/// class applied to every prime of the support).
class HFunction {
public:
  /// h(p) = X for every p in `support`.
  static HFunction invariable(ClassExpr X, PrimeSet support) {
    HFunction h;
    h.support_ = std::move(support);
    h.uniform_ = std::move(X);
    return h;
  }

  /// Explicit finite table; the support is the set of keys.
  static HFunction from_table(std::map<unsigned, ClassExpr> values) {
    if (values.empty()) throw std::invalid_argument("h-function table must be nonempty");
    HFunction h;
    std::vector<unsigned> primes;
    for (const auto& [p, c] : values) primes.push_back(p);
    h.support_ = PrimeSet::finite(std::move(primes));
    h.table_ = std::move(values);
    return h;
  }

  const PrimeSet& support() const { return support_; }

  /// Structural invariability: a single value class applied everywhere.
  bool invariable() const {
    if (uniform_) return true;
    for (const auto& [p, c] : table_)
      if (!(c == table_.begin()->second)) return false;
    return true;
  }

  const ClassExpr& value_at(unsigned p) const {
    if (!support_.contains(p))
      throw DomainError("h-function: prime " + std::to_string(p) + " outside the support");
    if (uniform_) return *uniform_;
    return table_.at(p);
  }

  const ClassExpr& uniform_value() const {
    if (uniform_) return *uniform_;
    if (invariable()) return table_.begin()->second;
    throw HypothesisError("h-function is not invariable");
  }

private:
  HFunction() = default;
  PrimeSet support_;
  std::optional<ClassExpr> uniform_;
  std::map<unsigned, ClassExpr> table_;
};

/// G in LH(h) = meet over p in Supp(h) of h(p) Epi(p') Np(p); works for
/// arbitrary (not only invariable) h-functions.
inline bool lh_member(const GroupPtr& G, const HFunction& h) {
  for (unsigned p : h.support().intersect(G->prime_support())) {
    ClassExpr step = cls::product(
        cls::product(h.value_at(p), cls::pi_groups(PrimeSet::cofinite({p}))),
        cls::p_groups(p));
    if (!member(G, step)) return false;
  }
  return true;
}

/// h-radical of G: the product of the h(p)-radicals over the support. Only
/// invariable h is accepted; there the product collapses to the X-radical,
/// and both routes are computed and compared whenever the support meets
/// sigma(G).
inline Subgroup h_radical(const GroupPtr& G, const HFunction& h) {
  if (!h.invariable())
    throw HypothesisError("h_radical: only invariable h-functions are supported");
  Subgroup viaX = radical(G, h.uniform_value());
  std::vector<unsigned> relevant = h.support().intersect(G->prime_support());
  if (!relevant.empty()) {
    IndexSet prod = G->trivial_set();
    for (unsigned p : relevant)
      prod = product_set(*G, prod, radical(G, h.value_at(p)).members());
    if (!(prod == viaX.members()))
      throw std::logic_error("h_radical: per-prime product disagrees with the X-radical");
  }
  return viaX;
}

struct HFunPredicates {
  bool integrated_ok;
  bool full_ok;
  bool invariable;
};

/// Empirical check of Definition-style h-function properties over a catalog:
/// integrated: members of h(p) lie in LH(h); full: members of h(p) lie in
/// h(q) Epi(q') for distinct support primes p, q. Primes are restricted to
/// those relevant to the catalog.
inline HFunPredicates hfun_predicates(const HFunction& h, std::span<const GroupPtr> catalog) {
  std::vector<unsigned> sigma;
  for (const auto& G : catalog)
    for (unsigned p : G->prime_support()) sigma.push_back(p);
  std::sort(sigma.begin(), sigma.end());
  sigma.erase(std::unique(sigma.begin(), sigma.end()), sigma.end());
  std::vector<unsigned> relevant = h.support().intersect(sigma);
  if (h.support().is_finite())
    for (unsigned p : h.support().listed())
      if (std::find(relevant.begin(), relevant.end(), p) == relevant.end())
        relevant.push_back(p);
  std::sort(relevant.begin(), relevant.end());

  HFunPredicates out{true, true, h.invariable()};
  for (unsigned p : relevant) {
    for (const auto& G : catalog) {
      if (!member(G, h.value_at(p))) continue;
      if (!lh_member(G, h)) out.integrated_ok = false;
      for (unsigned q : relevant) {
        if (q == p) continue;
        ClassExpr target =
            cls::product(h.value_at(q), cls::pi_groups(PrimeSet::cofinite({q})));
        if (!member(G, target)) out.full_ok = false;
      }
    }
  }
  return out;
}

}  // namespace permfit
