#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <cstddef>
#include <vector>

namespace permfit {

/// Fixed-universe bitset used for element-index sets of a group. Subgroups are
/// stored this way; equality, intersection and subset tests are word ops.
class IndexSet {
public:
  IndexSet() : n_(0) {}
  explicit IndexSet(std::size_t universe) : w_((universe + 63) / 64, 0), n_(universe) {}

  static IndexSet full(std::size_t universe) {
    IndexSet s(universe);
    for (auto& w : s.w_) w = ~0ull;
    s.trim();
    return s;
  }

  static IndexSet single(std::size_t universe, std::size_t i) {
    IndexSet s(universe);
    s.set(i);
    return s;
  }

  std::size_t universe_size() const { return n_; }

  bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) { w_[i >> 6] |= 1ull << (i & 63); }
  void reset(std::size_t i) { w_[i >> 6] &= ~(1ull << (i & 63)); }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : w_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool empty() const {
    for (auto w : w_)
      if (w) return false;
    return true;
  }

  bool subset_of(const IndexSet& other) const {
    assert(n_ == other.n_);
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~other.w_[i]) return false;
    return true;
  }

  IndexSet& operator&=(const IndexSet& other) {
    assert(n_ == other.n_);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= other.w_[i];
    return *this;
  }

  IndexSet& operator|=(const IndexSet& other) {
    assert(n_ == other.n_);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= other.w_[i];
    return *this;
  }

  friend IndexSet operator&(IndexSet a, const IndexSet& b) { return a &= b; }
  friend IndexSet operator|(IndexSet a, const IndexSet& b) { return a |= b; }

  friend bool operator==(const IndexSet& a, const IndexSet& b) = default;

  /// Deterministic total order on same-universe sets (word-lexicographic).
  friend bool operator<(const IndexSet& a, const IndexSet& b) {
    assert(a.n_ == b.n_);
    return a.w_ < b.w_;
  }

  /// Visit set bits in ascending index order.
  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t wi = 0; wi < w_.size(); ++wi) {
      std::uint64_t w = w_[wi];
      while (w) {
        unsigned b = static_cast<unsigned>(std::countr_zero(w));
        f(wi * 64 + b);
        w &= w - 1;
      }
    }
  }

  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  std::size_t hash() const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ull ^ n_;
    for (auto w : w_) {
      h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }

private:
  void trim() {
    if (n_ % 64) w_.back() &= (1ull << (n_ % 64)) - 1;
  }

  std::vector<std::uint64_t> w_;
  std::size_t n_;
};

struct IndexSetHash {
  std::size_t operator()(const IndexSet& s) const noexcept { return s.hash(); }
};

}  // namespace permfit
