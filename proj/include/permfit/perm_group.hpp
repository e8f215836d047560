#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "permfit/errors.hpp"
#include "permfit/index_set.hpp"
#include "permfit/perm.hpp"
#include "permfit/prime_set.hpp"

namespace permfit {

class PermGroup;
using GroupPtr = std::shared_ptr<const PermGroup>;

/// Quotient group together with the projection map: proj[i] is the element
/// index in `group` of the image of parent element i.
struct Quotient {
  GroupPtr group;
  std::vector<std::uint32_t> proj;
};

namespace detail {

/// Per-group caches. Lazily filled by the lattice/class layers; guarded by a
/// mutex so immutable groups stay safe for concurrent reads. Lookups and
/// inserts happen under the lock, computation happens outside it (a benign
/// duplicate computation yields the same value).
struct GroupCache {
  std::mutex m;
  std::optional<std::vector<IndexSet>> lattice;     // all subgroups, canonical order
  std::optional<std::vector<IndexSet>> normals;     // normal subgroups of the whole group
  std::optional<std::vector<IndexSet>> subnormals;  // subnormal subgroups
  std::optional<std::vector<std::uint64_t>> comp_factor_orders;
  std::unordered_map<IndexSet, GroupPtr, IndexSetHash> materialized;
  std::unordered_map<IndexSet, Quotient, IndexSetHash> quotients;
  std::unordered_map<std::string, bool> member_memo;       // class text -> membership
  std::unordered_map<std::string, IndexSet> radical_memo;  // class text -> radical
  std::unordered_map<std::string, IndexSet> residual_memo;
};

}  // namespace detail

/// A finite permutation group with its full element set materialized at
/// construction, plus multiplication/inverse tables for index arithmetic when
/// the order is small enough for lattice work.
///
/// Groups are immutable once built and always handled through GroupPtr.
/// Element indices refer to the canonical (lexicographically sorted) element
/// list; index 0 is the identity.
class PermGroup : public std::enable_shared_from_this<PermGroup> {
public:
  static constexpr std::size_t kDefaultElementBound = 5040;
  static constexpr std::size_t kDefaultSubgroupBound = 500;
  /// Groups up to this order carry multiplication tables; lattice operations
  /// require one.
  static constexpr std::size_t kTableLimit = 2048;

  /// Closure of the generators. Rejects degree 0, non-matching generator
  /// degrees, and closures larger than `element_bound`.
  static GroupPtr from_generators(unsigned degree, std::vector<Permutation> gens,
                                  std::string label = "",
                                  std::size_t element_bound = kDefaultElementBound) {
    if (degree == 0) throw std::invalid_argument("group degree must be positive");
    for (const auto& g : gens)
      if (g.degree() != degree)
        throw std::invalid_argument("generator degree mismatch");

    std::unordered_map<Permutation, std::uint32_t, PermHash> seen;
    std::deque<Permutation> todo;
    Permutation id = Permutation::identity(degree);
    seen.emplace(id, 0);
    todo.push_back(id);
    while (!todo.empty()) {
      Permutation cur = std::move(todo.front());
      todo.pop_front();
      for (const auto& g : gens) {
        Permutation next = cur.then(g);
        if (seen.emplace(next, 0).second) {
          if (seen.size() > element_bound)
            throw BoundExceeded("group closure exceeds element bound", element_bound);
          todo.push_back(std::move(next));
        }
      }
    }
    std::vector<Permutation> elems;
    elems.reserve(seen.size());
    for (const auto& [p, idx] : seen) elems.push_back(p);
    return finish(degree, std::move(elems), std::move(gens), std::move(label));
  }

  /// Wrap an already-closed element set (subgroup materialization, quotients).
  /// Closure is verified through the multiplication table when one is built.
  static GroupPtr from_elements(unsigned degree, std::vector<Permutation> elems,
                                std::string label = "") {
    if (degree == 0) throw std::invalid_argument("group degree must be positive");
    if (elems.empty()) throw std::invalid_argument("element set must contain the identity");
    return finish(degree, std::move(elems), {}, std::move(label));
  }

  unsigned degree() const { return degree_; }
  std::uint64_t order() const { return elems_.size(); }
  const std::string& label() const { return label_; }
  const std::vector<Permutation>& elements() const { return elems_; }
  const Permutation& element(std::size_t i) const { return elems_[i]; }

  /// Defining generators (empty for groups built from element sets); a small
  /// generating subset is always available via the lattice layer instead.
  const std::vector<Permutation>& generators() const { return gens_; }

  /// Primes dividing the order, ascending.
  const std::vector<unsigned>& prime_support() const { return primes_; }

  std::optional<std::size_t> index_of(const Permutation& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::uint64_t element_order(std::size_t i) const { return orders_[i]; }

  bool has_table() const { return !mult_.empty(); }

  /// Throws when lattice-grade index arithmetic is unavailable for this order.
  void require_table() const {
    if (!has_table())
      throw BoundExceeded("group order " + std::to_string(order()) +
                              " exceeds the multiplication-table limit",
                          kTableLimit);
  }

  /// Index of element(i) * element(j) (i applied first).
  std::size_t mult(std::size_t i, std::size_t j) const { return mult_[i * elems_.size() + j]; }
  std::size_t inv(std::size_t i) const { return inv_[i]; }
  /// Index of g^-1 * x * g.
  std::size_t conj(std::size_t x, std::size_t g) const { return mult(mult(inv_[g], x), g); }

  IndexSet full_set() const { return IndexSet::full(elems_.size()); }
  IndexSet trivial_set() const { return IndexSet::single(elems_.size(), 0); }

  bool is_abelian() const {
    if (has_table()) {
      for (std::size_t i = 1; i < elems_.size(); ++i)
        for (std::size_t j = i + 1; j < elems_.size(); ++j)
          if (mult(i, j) != mult(j, i)) return false;
      return true;
    }
    for (std::size_t i = 1; i < elems_.size(); ++i)
      for (std::size_t j = i + 1; j < elems_.size(); ++j)
        if (elems_[i].then(elems_[j]) != elems_[j].then(elems_[i])) return false;
    return true;
  }

  detail::GroupCache& cache() const { return cache_; }

private:
  PermGroup() = default;

  static GroupPtr finish(unsigned degree, std::vector<Permutation> elems,
                         std::vector<Permutation> gens, std::string label) {
    auto g = std::shared_ptr<PermGroup>(new PermGroup());
    g->degree_ = degree;
    g->label_ = std::move(label);
    g->gens_ = std::move(gens);
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    g->elems_ = std::move(elems);
    if (!g->elems_.front().is_identity())
      throw std::invalid_argument("element set must contain the identity");

    const std::size_t n = g->elems_.size();
    g->index_.reserve(n * 2);
    for (std::size_t i = 0; i < n; ++i) g->index_.emplace(g->elems_[i], i);

    g->orders_.resize(n);
    for (std::size_t i = 0; i < n; ++i) g->orders_[i] = g->elems_[i].order();
    g->primes_ = prime_factors(n);

    if (n <= kTableLimit) {
      g->mult_.resize(n * n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          auto idx = g->index_of(g->elems_[i].then(g->elems_[j]));
          if (!idx)
            throw std::invalid_argument("element set is not closed under composition");
          g->mult_[i * n + j] = static_cast<std::uint32_t>(*idx);
        }
      }
      g->inv_.resize(n);
      for (std::size_t i = 0; i < n; ++i) {
        auto idx = g->index_of(g->elems_[i].inverse());
        if (!idx) throw std::invalid_argument("element set is not closed under inversion");
        g->inv_[i] = static_cast<std::uint32_t>(*idx);
      }
    }
    return g;
  }

  unsigned degree_ = 0;
  std::string label_;
  std::vector<Permutation> gens_;
  std::vector<Permutation> elems_;
  std::unordered_map<Permutation, std::uint32_t, PermHash> index_;
  std::vector<std::uint64_t> orders_;
  std::vector<unsigned> primes_;
  std::vector<std::uint32_t> mult_;
  std::vector<std::uint32_t> inv_;
  mutable detail::GroupCache cache_;
};

/// A subgroup of a fixed parent, stored as an explicit element-index set.
/// Two subgroups of the same parent are equal iff their member sets are.
class Subgroup {
public:
  Subgroup() = default;
  Subgroup(GroupPtr parent, IndexSet members)
      : parent_(std::move(parent)), members_(std::move(members)) {}

  const GroupPtr& parent() const { return parent_; }
  const IndexSet& members() const { return members_; }
  std::uint64_t order() const { return members_.count(); }
  bool is_whole() const { return order() == parent_->order(); }
  bool is_trivial() const { return order() == 1; }

  bool contains(const Subgroup& other) const {
    return other.members_.subset_of(members_);
  }

  std::vector<Permutation> element_perms() const {
    std::vector<Permutation> out;
    out.reserve(order());
    members_.for_each([&](std::size_t i) { out.push_back(parent_->element(i)); });
    return out;
  }

  std::vector<unsigned> prime_support() const { return prime_factors(order()); }

  /// Materialize as a standalone group (same degree, same permutations).
  /// Results are cached on the parent, so repeated materializations are
  /// shared. Requires the parent's multiplication table.
  GroupPtr as_group() const {
    if (members_ == parent_->full_set())
      return parent_;
    auto& cache = parent_->cache();
    {
      std::lock_guard<std::mutex> lock(cache.m);
      auto it = cache.materialized.find(members_);
      if (it != cache.materialized.end()) return it->second;
    }
    GroupPtr g = PermGroup::from_elements(
        parent_->degree(), element_perms(),
        parent_->label() + "[" + std::to_string(order()) + "]");
    std::lock_guard<std::mutex> lock(cache.m);
    auto [it, inserted] = cache.materialized.emplace(members_, std::move(g));
    return it->second;
  }

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent_ == b.parent_ && a.members_ == b.members_;
  }

  /// Canonical order: by order, then by member-set words.
  friend bool operator<(const Subgroup& a, const Subgroup& b) {
    auto ca = a.members_.count(), cb = b.members_.count();
    if (ca != cb) return ca < cb;
    return a.members_ < b.members_;
  }

private:
  GroupPtr parent_;
  IndexSet members_;
};

/// Deduplicated, canonically sorted list of subgroups of one parent.
class SubgroupSet {
public:
  SubgroupSet() = default;
  SubgroupSet(GroupPtr parent, std::vector<IndexSet> sets) : parent_(std::move(parent)) {
    std::sort(sets.begin(), sets.end(), [](const IndexSet& a, const IndexSet& b) {
      auto ca = a.count(), cb = b.count();
      if (ca != cb) return ca < cb;
      return a < b;
    });
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    items_.reserve(sets.size());
    for (auto& s : sets) items_.emplace_back(parent_, std::move(s));
  }

  const GroupPtr& parent() const { return parent_; }
  const std::vector<Subgroup>& items() const { return items_; }
  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  const Subgroup& operator[](std::size_t i) const { return items_[i]; }

  // direct iteration keeps range-for over temporaries safe
  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }

  bool contains(const IndexSet& members) const {
    for (const auto& s : items_)
      if (s.members() == members) return true;
    return false;
  }

  std::vector<std::uint64_t> orders() const {
    std::vector<std::uint64_t> out;
    out.reserve(items_.size());
    for (const auto& s : items_) out.push_back(s.order());
    return out;
  }

  friend bool operator==(const SubgroupSet& a, const SubgroupSet& b) {
    if (a.items_.size() != b.items_.size()) return false;
    for (std::size_t i = 0; i < a.items_.size(); ++i)
      if (a.items_[i].members() != b.items_[i].members()) return false;
    return true;
  }

private:
  GroupPtr parent_;
  std::vector<Subgroup> items_;
};

}  // namespace permfit
