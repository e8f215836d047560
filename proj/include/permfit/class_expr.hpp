#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "permfit/lattice.hpp"
#include "permfit/perm_group.hpp"
#include "permfit/prime_set.hpp"

namespace permfit {

/// Composable group-class expression with decidable membership at this scale.
///
/// Node semantics (cls::... factories):
///   triv        the one-element group only
///   all         every group
///   sol         soluble groups (derived series reaches 1)
///   nil         nilpotent groups (every Sylow subgroup normal)
///   Epi(P)      pi-groups: sigma(G) inside P
///   Np(p)       p-groups
///   NilPi(P)    nilpotent pi-groups
///   PiNil(P)    pi-nilpotent: a normal Hall p'-subgroup for every p in P
///   PiSol(P)    pi-soluble: every composition factor a p-group (p in P)
///               or a P'-group
///   prod(F,H)   class product: G with G/(F-radical of G) in H
///   meet(...)   intersection
///   hartley(X;P)  intersection over p in P of prod(prod(X, Epi({p}')), Np(p))
class ClassExpr {
public:
  enum class Kind {
    Trivial,
    All,
    Soluble,
    Nilpotent,
    PiGroups,
    PiSoluble,
    PiNilpotent,
    PGroups,
    NilpotentPi,
    Product,
    Meet,
    Hartley,
  };

  Kind kind() const { return kind_; }
  const std::vector<ClassExpr>& children() const { return kids_; }
  const PrimeSet& primes() const { return primes_; }
  unsigned prime() const { return p_; }

  std::string to_string() const {
    switch (kind_) {
      case Kind::Trivial: return "triv";
      case Kind::All: return "all";
      case Kind::Soluble: return "sol";
      case Kind::Nilpotent: return "nil";
      case Kind::PiGroups: return "Epi(" + primes_.to_string() + ")";
      case Kind::PiSoluble: return "PiSol(" + primes_.to_string() + ")";
      case Kind::PiNilpotent: return "PiNil(" + primes_.to_string() + ")";
      case Kind::PGroups: return "Np(" + std::to_string(p_) + ")";
      case Kind::NilpotentPi: return "NilPi(" + primes_.to_string() + ")";
      case Kind::Product:
        return "prod(" + kids_[0].to_string() + "," + kids_[1].to_string() + ")";
      case Kind::Meet: {
        std::string s = "meet(";
        for (std::size_t i = 0; i < kids_.size(); ++i) {
          if (i) s += ',';
          s += kids_[i].to_string();
        }
        return s + ")";
      }
      case Kind::Hartley:
        return "hartley(" + kids_[0].to_string() + ";" + primes_.to_string() + ")";
    }
    return "?";
  }

  friend bool operator==(const ClassExpr& a, const ClassExpr& b) {
    return a.kind_ == b.kind_ && a.p_ == b.p_ && a.primes_ == b.primes_ && a.kids_ == b.kids_;
  }

  struct cls;

private:
  ClassExpr(Kind k, std::vector<ClassExpr> kids, PrimeSet ps, unsigned p)
      : kind_(k), kids_(std::move(kids)), primes_(std::move(ps)), p_(p) {}

  Kind kind_;
  std::vector<ClassExpr> kids_;
  PrimeSet primes_;
  unsigned p_ = 0;
};

/// Factory namespace for class expressions.
struct ClassExpr::cls {
  static ClassExpr trivial() { return ClassExpr(Kind::Trivial, {}, {}, 0); }
  static ClassExpr all() { return ClassExpr(Kind::All, {}, {}, 0); }
  static ClassExpr soluble() { return ClassExpr(Kind::Soluble, {}, {}, 0); }
  static ClassExpr nilpotent() { return ClassExpr(Kind::Nilpotent, {}, {}, 0); }
  static ClassExpr pi_groups(PrimeSet ps) {
    return ClassExpr(Kind::PiGroups, {}, std::move(ps), 0);
  }
  static ClassExpr pi_soluble(PrimeSet ps) {
    return ClassExpr(Kind::PiSoluble, {}, std::move(ps), 0);
  }
  static ClassExpr pi_nilpotent(PrimeSet ps) {
    return ClassExpr(Kind::PiNilpotent, {}, std::move(ps), 0);
  }
  static ClassExpr p_groups(unsigned p) {
    if (!is_prime(p)) throw std::invalid_argument("Np: not a prime");
    return ClassExpr(Kind::PGroups, {}, {}, p);
  }
  static ClassExpr nilpotent_pi(PrimeSet ps) {
    return ClassExpr(Kind::NilpotentPi, {}, std::move(ps), 0);
  }
  static ClassExpr product(ClassExpr f, ClassExpr h) {
    return ClassExpr(Kind::Product, {std::move(f), std::move(h)}, {}, 0);
  }
  static ClassExpr meet(std::vector<ClassExpr> parts) {
    if (parts.empty()) throw std::invalid_argument("meet: needs at least one part");
    return ClassExpr(Kind::Meet, std::move(parts), {}, 0);
  }
  static ClassExpr hartley(ClassExpr x, PrimeSet support) {
    return ClassExpr(Kind::Hartley, {std::move(x)}, std::move(support), 0);
  }
};

using cls = ClassExpr::cls;

// ---------------------------------------------------------------------------
// Membership, radicals, residuals
// ---------------------------------------------------------------------------

bool member(const GroupPtr& G, const ClassExpr& C);
Subgroup radical(const GroupPtr& G, const ClassExpr& C);

namespace detail {

/// G is soluble iff its derived series reaches the trivial subgroup.
inline bool is_soluble(const PermGroup& G) {
  IndexSet cur = G.full_set();
  for (;;) {
    if (cur.count() == 1) return true;
    IndexSet next = derived_subgroup(G, cur);
    if (next == cur) return false;
    cur = next;
  }
}

/// G is nilpotent iff for every p the p-elements form a subgroup (which is
/// then the unique, normal Sylow p-subgroup).
inline bool is_nilpotent(const PermGroup& G) {
  for (unsigned p : G.prime_support()) {
    std::vector<std::size_t> pelems;
    for (std::size_t i = 0; i < G.order(); ++i) {
      std::uint64_t o = G.element_order(i);
      while (o % p == 0) o /= p;
      if (o == 1) pelems.push_back(i);
    }
    if (generated_subgroup(G, pelems).count() != p_part(G.order(), p)) return false;
  }
  return true;
}

/// G is p-nilpotent iff the p'-elements generate a p'-subgroup; that subgroup
/// is then the normal Hall p'-subgroup, of order the full p'-part of |G|.
inline bool is_p_nilpotent(const PermGroup& G, unsigned p) {
  if (G.order() % p != 0) return true;
  std::vector<std::size_t> coprime;
  for (std::size_t i = 0; i < G.order(); ++i)
    if (G.element_order(i) % p != 0) coprime.push_back(i);
  return generated_subgroup(G, coprime).count() == G.order() / p_part(G.order(), p);
}

/// Composition factor orders (Jordan-Hoelder: the multiset is independent of
/// the chosen maximal normal subgroups). Cached per group.
inline const std::vector<std::uint64_t>& comp_factor_orders(const GroupPtr& G) {
  auto& cache = G->cache();
  {
    std::lock_guard<std::mutex> lock(cache.m);
    if (cache.comp_factor_orders) return *cache.comp_factor_orders;
  }
  std::vector<std::uint64_t> factors;
  if (G->order() > 1) {
    const auto& normals = cached_normals(*G);
    // maximal proper normal subgroup: last proper entry in the sorted list
    IndexSet maximal(G->order());
    for (const auto& N : normals)
      if (N.count() < G->order()) maximal = N;
    GroupPtr M = Subgroup(G, maximal).as_group();
    factors = comp_factor_orders(M);
    factors.push_back(G->order() / M->order());
  }
  std::lock_guard<std::mutex> lock(cache.m);
  if (!cache.comp_factor_orders) cache.comp_factor_orders = std::move(factors);
  return *cache.comp_factor_orders;
}

inline bool is_pi_soluble(const GroupPtr& G, const PrimeSet& pi) {
  for (std::uint64_t f : comp_factor_orders(G)) {
    if (is_prime(f) && pi.contains(static_cast<unsigned>(f))) continue;  // p-group, p in pi
    bool pi_free = true;  // otherwise the factor must be a pi'-group
    for (unsigned p : prime_factors(f))
      if (pi.contains(p)) pi_free = false;
    if (!pi_free) return false;
  }
  return true;
}

inline bool member_eval(const GroupPtr& G, const ClassExpr& C) {
  using Kind = ClassExpr::Kind;
  switch (C.kind()) {
    case Kind::Trivial:
      return G->order() == 1;
    case Kind::All:
      return true;
    case Kind::Soluble:
      G->require_table();
      return is_soluble(*G);
    case Kind::Nilpotent:
      G->require_table();
      return is_nilpotent(*G);
    case Kind::PiGroups:
      for (unsigned p : G->prime_support())
        if (!C.primes().contains(p)) return false;
      return true;
    case Kind::PGroups: {
      std::uint64_t n = G->order();
      while (n % C.prime() == 0) n /= C.prime();
      return n == 1;
    }
    case Kind::NilpotentPi: {
      for (unsigned p : G->prime_support())
        if (!C.primes().contains(p)) return false;
      G->require_table();
      return is_nilpotent(*G);
    }
    case Kind::PiSoluble:
      G->require_table();
      return is_pi_soluble(G, C.primes());
    case Kind::PiNilpotent: {
      G->require_table();
      for (unsigned p : C.primes().intersect(G->prime_support()))
        if (!is_p_nilpotent(*G, p)) return false;
      return true;
    }
    case Kind::Product: {
      Subgroup r = radical(G, C.children()[0]);
      Quotient q = quotient(G, r);
      return member(q.group, C.children()[1]);
    }
    case Kind::Meet:
      for (const auto& part : C.children())
        if (!member(G, part)) return false;
      return true;
    case Kind::Hartley: {
      // G in LH(h) for the invariable h with value X on the support:
      // for each relevant p, G / (X Epi(p'))-radical must be a p-group.
      const ClassExpr& X = C.children()[0];
      for (unsigned p : C.primes().intersect(G->prime_support())) {
        ClassExpr xep = cls::product(X, cls::pi_groups(PrimeSet::cofinite({p})));
        Subgroup r = radical(G, xep);
        Quotient q = quotient(G, r);
        if (!member(q.group, cls::p_groups(p))) return false;
      }
      return true;
    }
  }
  return false;
}

}  // namespace detail

/// Exact membership of G in the class C. Memoized per group.
inline bool member(const GroupPtr& G, const ClassExpr& C) {
  auto& cache = G->cache();
  std::string key = C.to_string();
  {
    std::lock_guard<std::mutex> lock(cache.m);
    auto it = cache.member_memo.find(key);
    if (it != cache.member_memo.end()) return it->second;
  }
  bool result = detail::member_eval(G, C);
  std::lock_guard<std::mutex> lock(cache.m);
  cache.member_memo.emplace(std::move(key), result);
  return result;
}

/// Membership of a subgroup, evaluated on its materialization.
inline bool member(const Subgroup& H, const ClassExpr& C) {
  return member(H.as_group(), C);
}

/// C-radical of G: the product of all normal C-subgroups. For the Fitting
/// classes provided here this is again a normal C-subgroup containing every
/// normal C-subgroup.
inline Subgroup radical(const GroupPtr& G, const ClassExpr& C) {
  G->require_table();
  auto& cache = G->cache();
  std::string key = C.to_string();
  {
    std::lock_guard<std::mutex> lock(cache.m);
    auto it = cache.radical_memo.find(key);
    if (it != cache.radical_memo.end()) return Subgroup(G, it->second);
  }
  IndexSet result = G->trivial_set();
  for (const auto& N : detail::cached_normals(*G)) {
    if (N.subset_of(result)) continue;
    if (member(Subgroup(G, N), C)) result = product_set(*G, result, N);
  }
  std::lock_guard<std::mutex> lock(cache.m);
  auto [it, inserted] = cache.radical_memo.emplace(std::move(key), std::move(result));
  return Subgroup(G, it->second);
}

/// C-radical of a subgroup, returned in the parent's index space.
inline Subgroup radical_of(const Subgroup& H, const ClassExpr& C) {
  GroupPtr Hg = H.as_group();
  Subgroup r = radical(Hg, C);
  if (Hg == H.parent()) return r;
  IndexSet out(H.parent()->order());
  r.members().for_each([&](std::size_t i) {
    out.set(*H.parent()->index_of(Hg->element(i)));
  });
  return Subgroup(H.parent(), out);
}

namespace detail {

inline bool residual_supported(const ClassExpr& C) {
  using Kind = ClassExpr::Kind;
  switch (C.kind()) {
    case Kind::All:
    case Kind::Trivial:
    case Kind::PiGroups:
    case Kind::PGroups:
    case Kind::Nilpotent:
    case Kind::PiNilpotent:
      return true;
    case Kind::Meet:
      for (const auto& part : C.children())
        if (!residual_supported(part)) return false;
      return true;
    default:
      return false;
  }
}

}  // namespace detail

/// C-residual of G: the smallest normal subgroup with quotient in C.
/// Only quotient-stable (formation-like) nodes are accepted; anything else
/// raises DomainError rather than silently intersecting a non-formation.
inline Subgroup residual(const GroupPtr& G, const ClassExpr& C) {
  if (!detail::residual_supported(C))
    throw DomainError("residual: class node '" + C.to_string() +
                      "' is not quotient-stable in this engine");
  G->require_table();
  auto& cache = G->cache();
  std::string key = C.to_string();
  {
    std::lock_guard<std::mutex> lock(cache.m);
    auto it = cache.residual_memo.find(key);
    if (it != cache.residual_memo.end()) return Subgroup(G, it->second);
  }
  IndexSet result = G->full_set();
  for (const auto& N : detail::cached_normals(*G)) {
    if (result.subset_of(N)) continue;
    Quotient q = quotient(G, Subgroup(G, N));
    if (member(q.group, C)) result &= N;
  }
  std::lock_guard<std::mutex> lock(cache.m);
  auto [it, inserted] = cache.residual_memo.emplace(std::move(key), std::move(result));
  return Subgroup(G, it->second);
}

}  // namespace permfit
