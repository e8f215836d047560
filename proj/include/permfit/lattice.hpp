#pragma once

#include <algorithm>
#include <optional>
#include <unordered_set>
#include <vector>

#include "permfit/perm_group.hpp"

namespace permfit {

// ---------------------------------------------------------------------------
// Index-space subgroup arithmetic. All functions below require G.has_table().
// ---------------------------------------------------------------------------

/// Subgroup generated by the given element indices. Right-multiplication BFS
/// from the identity; in a finite group the generated submonoid is already a
/// subgroup.
inline IndexSet generated_subgroup(const PermGroup& G, const std::vector<std::size_t>& gens) {
  IndexSet cur(G.order());
  cur.set(0);
  std::vector<std::size_t> queue{0};
  while (!queue.empty()) {
    std::size_t x = queue.back();
    queue.pop_back();
    for (std::size_t g : gens) {
      std::size_t y = G.mult(x, g);
      if (!cur.test(y)) {
        cur.set(y);
        queue.push_back(y);
      }
    }
  }
  return cur;
}

inline IndexSet generated_subgroup(const PermGroup& G, const IndexSet& seed) {
  return generated_subgroup(G, seed.indices());
}

/// A small generating subset of the subgroup H (greedy; each new generator at
/// least doubles the closure, so the result has <= log2|H| elements).
inline std::vector<std::size_t> generating_subset(const PermGroup& G, const IndexSet& H) {
  std::vector<std::size_t> gens;
  IndexSet cur(G.order());
  cur.set(0);
  H.for_each([&](std::size_t i) {
    if (cur.test(i)) return;
    gens.push_back(i);
    cur = generated_subgroup(G, gens);
  });
  return gens;
}

/// Element-wise product set A*B. This is a subgroup whenever one factor
/// normalizes the other (the only way it is used here).
inline IndexSet product_set(const PermGroup& G, const IndexSet& A, const IndexSet& B) {
  IndexSet out(G.order());
  A.for_each([&](std::size_t a) {
    B.for_each([&](std::size_t b) { out.set(G.mult(a, b)); });
  });
  return out;
}

inline IndexSet conjugate_set(const PermGroup& G, const IndexSet& H, std::size_t g) {
  IndexSet out(G.order());
  H.for_each([&](std::size_t h) { out.set(G.conj(h, g)); });
  return out;
}

/// Normal closure of `seed` under conjugation by the subgroup K.
inline IndexSet normal_closure_in(const PermGroup& G, const IndexSet& seed, const IndexSet& K) {
  std::vector<std::size_t> kgens = generating_subset(G, K);
  // close the seed under conjugation by K, then take the generated subgroup
  IndexSet orbit(G.order());
  std::vector<std::size_t> queue;
  seed.for_each([&](std::size_t s) {
    orbit.set(s);
    queue.push_back(s);
  });
  while (!queue.empty()) {
    std::size_t x = queue.back();
    queue.pop_back();
    for (std::size_t g : kgens) {
      std::size_t y = G.conj(x, g);
      if (!orbit.test(y)) {
        orbit.set(y);
        queue.push_back(y);
      }
    }
  }
  return generated_subgroup(G, orbit);
}

/// Derived subgroup [H,H]: normal closure in H of the generator commutators.
inline IndexSet derived_subgroup(const PermGroup& G, const IndexSet& H) {
  std::vector<std::size_t> gens = generating_subset(G, H);
  IndexSet comm(G.order());
  comm.set(0);
  for (std::size_t a : gens)
    for (std::size_t b : gens)
      comm.set(G.mult(G.mult(G.inv(a), G.inv(b)), G.mult(a, b)));
  return normal_closure_in(G, comm, H);
}

// ---------------------------------------------------------------------------
// Subgroup enumeration
// ---------------------------------------------------------------------------

namespace detail {

/// All subgroups of G: seed with the cyclic subgroups, then close under join
/// with a cyclic subgroup (every subgroup is a join of cyclics, so the
/// fixpoint is the full lattice). Deduplicated by member set.
inline std::vector<IndexSet> enumerate_subgroups(const PermGroup& G) {
  const std::size_t n = G.order();
  std::unordered_set<IndexSet, IndexSetHash> known;
  std::vector<IndexSet> cyclics;
  std::vector<std::size_t> cyclic_gen;  // one generator per cyclic subgroup

  IndexSet triv(n);
  triv.set(0);
  known.insert(triv);

  for (std::size_t i = 1; i < n; ++i) {
    IndexSet c = generated_subgroup(G, std::vector<std::size_t>{i});
    if (known.insert(c).second) {
      cyclics.push_back(c);
      cyclic_gen.push_back(i);
    }
  }

  struct Entry {
    IndexSet set;
    std::vector<std::size_t> gens;
  };
  std::vector<Entry> work;
  work.reserve(cyclics.size());
  for (std::size_t i = 0; i < cyclics.size(); ++i)
    work.push_back({cyclics[i], {cyclic_gen[i]}});

  for (std::size_t wi = 0; wi < work.size(); ++wi) {
    // joining with every cyclic reaches the same fixpoint as pairwise joins
    for (std::size_t ci = 0; ci < cyclics.size(); ++ci) {
      if (cyclics[ci].subset_of(work[wi].set)) continue;
      std::vector<std::size_t> gens = work[wi].gens;
      gens.push_back(cyclic_gen[ci]);
      IndexSet join = generated_subgroup(G, gens);
      if (known.insert(join).second) work.push_back({std::move(join), std::move(gens)});
    }
  }

  std::vector<IndexSet> out(known.begin(), known.end());
  std::sort(out.begin(), out.end(), [](const IndexSet& a, const IndexSet& b) {
    auto ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    return a < b;
  });
  return out;
}

/// All normal subgroups of the subgroup H (normality relative to H): join
/// closure of the element normal closures. Much cheaper than filtering the
/// full lattice and independent of it.
inline std::vector<IndexSet> enumerate_normal_subgroups(const PermGroup& G, const IndexSet& H) {
  std::unordered_set<IndexSet, IndexSetHash> known;
  std::vector<IndexSet> work;

  IndexSet triv(G.order());
  triv.set(0);
  known.insert(triv);
  work.push_back(triv);

  H.for_each([&](std::size_t x) {
    if (x == 0) return;
    IndexSet nc = normal_closure_in(G, IndexSet::single(G.order(), x), H);
    if (known.insert(nc).second) work.push_back(nc);
  });

  // product of two H-normal subgroups is again an H-normal subgroup
  for (std::size_t i = 0; i < work.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (work[j].subset_of(work[i]) || work[i].subset_of(work[j])) continue;
      IndexSet prod = product_set(G, work[i], work[j]);
      if (known.insert(prod).second) work.push_back(prod);
    }
  }

  std::vector<IndexSet> out(known.begin(), known.end());
  std::sort(out.begin(), out.end(), [](const IndexSet& a, const IndexSet& b) {
    auto ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    return a < b;
  });
  return out;
}

inline const std::vector<IndexSet>& cached_lattice(const PermGroup& G) {
  auto& cache = G.cache();
  {
    std::lock_guard<std::mutex> lock(cache.m);
    if (cache.lattice) return *cache.lattice;
  }
  auto lattice = enumerate_subgroups(G);
  std::lock_guard<std::mutex> lock(cache.m);
  if (!cache.lattice) cache.lattice = std::move(lattice);
  return *cache.lattice;
}

inline const std::vector<IndexSet>& cached_normals(const PermGroup& G) {
  auto& cache = G.cache();
  {
    std::lock_guard<std::mutex> lock(cache.m);
    if (cache.normals) return *cache.normals;
  }
  auto normals = enumerate_normal_subgroups(G, G.full_set());
  std::lock_guard<std::mutex> lock(cache.m);
  if (!cache.normals) cache.normals = std::move(normals);
  return *cache.normals;
}

}  // namespace detail

/// Every subgroup of G, exactly once. `bound` caps the group order for which
/// enumeration is attempted.
inline SubgroupSet subgroups(const GroupPtr& G,
                             std::size_t bound = PermGroup::kDefaultSubgroupBound) {
  if (G->order() > bound)
    throw BoundExceeded("subgroup enumeration refused: group order " +
                            std::to_string(G->order()) + " exceeds the enumeration bound",
                        bound);
  G->require_table();
  return SubgroupSet(G, detail::cached_lattice(*G));
}

inline bool is_normal_in(const PermGroup& G, const IndexSet& H, const IndexSet& K) {
  for (std::size_t g : generating_subset(G, K))
    if (!(conjugate_set(G, H, g) == H)) return false;
  return true;
}

/// Is H normal in K (or in its whole parent)? Parents must match.
inline bool is_normal(const Subgroup& H, const Subgroup& K) {
  if (H.parent() != K.parent()) throw DomainError("is_normal: subgroups of different parents");
  if (!H.members().subset_of(K.members()))
    throw DomainError("is_normal: H is not contained in K");
  return is_normal_in(*H.parent(), H.members(), K.members());
}

inline bool is_normal(const Subgroup& H) {
  return is_normal_in(*H.parent(), H.members(), H.parent()->full_set());
}

inline SubgroupSet normal_subgroups(const GroupPtr& G) {
  G->require_table();
  return SubgroupSet(G, detail::cached_normals(*G));
}

/// Subnormality via the descending normal-closure chain
/// G >= N1 >= N2 >= ... with N_{i+1} the normal closure of H in N_i;
/// H is subnormal iff the chain stabilizes at H.
inline bool is_subnormal_in(const PermGroup& G, const IndexSet& H, const IndexSet& K) {
  IndexSet cur = K;
  for (;;) {
    IndexSet next = normal_closure_in(G, H, cur);
    if (next == H) return true;
    if (next == cur) return cur == H;
    cur = next;
  }
}

inline bool is_subnormal(const Subgroup& H) {
  if (!H.parent()) throw DomainError("is_subnormal: empty subgroup");
  return is_subnormal_in(*H.parent(), H.members(), H.parent()->full_set());
}

namespace detail {

inline const std::vector<IndexSet>& cached_subnormals(const PermGroup& G) {
  auto& cache = G.cache();
  {
    std::lock_guard<std::mutex> lock(cache.m);
    if (cache.subnormals) return *cache.subnormals;
  }
  std::vector<IndexSet> out;
  for (const auto& s : cached_lattice(G))
    if (is_subnormal_in(G, s, G.full_set())) out.push_back(s);
  std::lock_guard<std::mutex> lock(cache.m);
  if (!cache.subnormals) cache.subnormals = std::move(out);
  return *cache.subnormals;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Quotients
// ---------------------------------------------------------------------------

/// G acting on the cosets of a normal subgroup N. The kernel of the action is
/// exactly N, so quotient elements correspond 1:1 to cosets; proj maps each
/// parent element to its coset's element index in the quotient group.
/// Quotient by the trivial subgroup returns G itself with the identity map.
inline Quotient quotient(const GroupPtr& G, const Subgroup& N) {
  if (N.parent() != G) throw DomainError("quotient: subgroup of a different parent");
  G->require_table();
  if (!is_normal(N)) throw DomainError("quotient: subgroup is not normal");

  auto& cache = G->cache();
  {
    std::lock_guard<std::mutex> lock(cache.m);
    auto it = cache.quotients.find(N.members());
    if (it != cache.quotients.end()) return it->second;
  }

  const std::size_t n = G->order();
  Quotient q;
  if (N.order() == 1) {
    q.group = G;
    q.proj.resize(n);
    for (std::size_t i = 0; i < n; ++i) q.proj[i] = static_cast<std::uint32_t>(i);
  } else {
    // cosets, numbered by their minimal element
    std::vector<std::uint32_t> coset_of(n, UINT32_MAX);
    std::vector<std::size_t> reps;
    for (std::size_t i = 0; i < n; ++i) {
      if (coset_of[i] != UINT32_MAX) continue;
      std::uint32_t id = static_cast<std::uint32_t>(reps.size());
      reps.push_back(i);
      N.members().for_each([&](std::size_t nn) {
        coset_of[G->mult(nn, i)] = id;
      });
    }
    const std::size_t m = reps.size();
    const unsigned qdeg = static_cast<unsigned>(std::max<std::size_t>(m, 1));
    std::vector<Permutation> qelems;
    qelems.reserve(m);
    std::vector<Permutation> by_coset;
    by_coset.reserve(m);
    for (std::size_t c = 0; c < m; ++c) {
      std::vector<unsigned> img(qdeg, 0);
      for (std::size_t i = 0; i < m; ++i)
        img[i] = coset_of[G->mult(reps[i], reps[c])];
      by_coset.emplace_back(std::move(img));
    }
    q.group = PermGroup::from_elements(
        qdeg, by_coset, G->label() + "/N" + std::to_string(N.order()));
    q.proj.resize(n);
    std::vector<std::uint32_t> coset_to_elem(m);
    for (std::size_t c = 0; c < m; ++c)
      coset_to_elem[c] = static_cast<std::uint32_t>(*q.group->index_of(by_coset[c]));
    for (std::size_t i = 0; i < n; ++i) q.proj[i] = coset_to_elem[coset_of[i]];
  }

  std::lock_guard<std::mutex> lock(cache.m);
  auto [it, inserted] = cache.quotients.emplace(N.members(), std::move(q));
  return it->second;
}

/// Image of a parent subgroup under the projection (subgroup of the quotient).
inline IndexSet project_subgroup(const Quotient& q, const IndexSet& H) {
  IndexSet out(q.group->order());
  H.for_each([&](std::size_t i) { out.set(q.proj[i]); });
  return out;
}

/// Preimage in the parent of a quotient subgroup.
inline IndexSet pull_back(const Quotient& q, const IndexSet& Hbar) {
  IndexSet out(q.proj.size());
  for (std::size_t i = 0; i < q.proj.size(); ++i)
    if (Hbar.test(q.proj[i])) out.set(i);
  return out;
}

// ---------------------------------------------------------------------------
// Centralizers, normalizers, conjugacy
// ---------------------------------------------------------------------------

inline Subgroup centralizer(const Subgroup& H) {
  const PermGroup& G = *H.parent();
  G.require_table();
  std::vector<std::size_t> hgens = generating_subset(G, H.members());
  IndexSet out(G.order());
  for (std::size_t g = 0; g < G.order(); ++g) {
    bool commutes = true;
    for (std::size_t h : hgens) {
      if (G.mult(g, h) != G.mult(h, g)) {
        commutes = false;
        break;
      }
    }
    if (commutes) out.set(g);
  }
  return Subgroup(H.parent(), out);
}

inline Subgroup normalizer(const Subgroup& H) {
  const PermGroup& G = *H.parent();
  G.require_table();
  IndexSet out(G.order());
  for (std::size_t g = 0; g < G.order(); ++g)
    if (conjugate_set(G, H.members(), g) == H.members()) out.set(g);
  return Subgroup(H.parent(), out);
}

/// Some g with H^g = K, if the subgroups are conjugate. Deterministic: the
/// first witness in element order.
inline std::optional<Permutation> are_conjugate(const Subgroup& H, const Subgroup& K) {
  if (H.parent() != K.parent())
    throw DomainError("are_conjugate: subgroups of different parents");
  const PermGroup& G = *H.parent();
  G.require_table();
  if (H.order() != K.order()) return std::nullopt;
  for (std::size_t g = 0; g < G.order(); ++g)
    if (conjugate_set(G, H.members(), g) == K.members()) return G.element(g);
  return std::nullopt;
}

/// Partition of the items of S into conjugacy classes; classes are listed in
/// order of their first member, each class holds ascending item indices.
inline std::vector<std::vector<std::size_t>> conjugacy_classes(const SubgroupSet& S) {
  if (S.empty()) return {};
  const PermGroup& G = *S.parent();
  G.require_table();
  std::unordered_map<IndexSet, std::size_t, IndexSetHash> pos;
  for (std::size_t i = 0; i < S.size(); ++i) pos.emplace(S[i].members(), i);

  std::vector<bool> assigned(S.size(), false);
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < S.size(); ++i) {
    if (assigned[i]) continue;
    std::vector<std::size_t> cls;
    for (std::size_t g = 0; g < G.order(); ++g) {
      IndexSet conj = conjugate_set(G, S[i].members(), g);
      auto it = pos.find(conj);
      if (it != pos.end() && !assigned[it->second]) {
        assigned[it->second] = true;
        cls.push_back(it->second);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

inline std::size_t conjugacy_class_count(const SubgroupSet& S) {
  return conjugacy_classes(S).size();
}

// ---------------------------------------------------------------------------
// Order-filtered families
// ---------------------------------------------------------------------------

inline SubgroupSet subgroups_of_order(const GroupPtr& G, std::uint64_t order,
                                      std::size_t bound = PermGroup::kDefaultSubgroupBound) {
  SubgroupSet all = subgroups(G, bound);
  std::vector<IndexSet> keep;
  for (const auto& s : all)
    if (s.order() == order) keep.push_back(s.members());
  return SubgroupSet(G, std::move(keep));
}

/// Sylow p-subgroups: subgroups whose order is the full p-part of |G|.
/// For p not dividing |G| this is the trivial subgroup.
inline SubgroupSet sylow(const GroupPtr& G, unsigned p,
                         std::size_t bound = PermGroup::kDefaultSubgroupBound) {
  if (!is_prime(p)) throw std::invalid_argument("sylow: not a prime");
  return subgroups_of_order(G, p_part(G->order(), p), bound);
}

}  // namespace permfit
