#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace permfit {

/// A permutation of {0, ..., degree-1}, stored as its image table:
/// point i maps to images()[i].
///
/// Composition convention: (a.then(b))[i] == b[a[i]], i.e. apply a first.
/// This matches the right-action convention x^(ab) = (x^a)^b used throughout.
class Permutation {
public:
  /// Identity permutation on `degree` points.
  explicit Permutation(unsigned degree) : img_(degree) {
    if (degree == 0) throw std::invalid_argument("permutation degree must be positive");
    std::iota(img_.begin(), img_.end(), 0u);
  }

  /// From an explicit image table; must be a bijection on {0,...,n-1}.
  explicit Permutation(std::vector<unsigned> images) : img_(std::move(images)) {
    if (img_.empty()) throw std::invalid_argument("permutation degree must be positive");
    std::vector<bool> seen(img_.size(), false);
    for (unsigned v : img_) {
      if (v >= img_.size() || seen[v])
        throw std::invalid_argument("image table is not a bijection");
      seen[v] = true;
    }
  }

  static Permutation identity(unsigned degree) { return Permutation(degree); }

  /// Build from disjoint cycles of 0-based points. Points may appear in at
  /// most one cycle; points left out are fixed.
  static Permutation from_cycles(unsigned degree,
                                 const std::vector<std::vector<unsigned>>& cycles) {
    Permutation p(degree);
    std::vector<bool> used(degree, false);
    for (const auto& cyc : cycles) {
      if (cyc.empty()) throw std::invalid_argument("empty cycle");
      for (unsigned pt : cyc) {
        if (pt >= degree) throw std::invalid_argument("cycle point out of range");
        if (used[pt]) throw std::invalid_argument("point repeated across cycles");
        used[pt] = true;
      }
      for (std::size_t i = 0; i < cyc.size(); ++i)
        p.img_[cyc[i]] = cyc[(i + 1) % cyc.size()];
    }
    return p;
  }

  unsigned degree() const { return static_cast<unsigned>(img_.size()); }
  unsigned operator[](unsigned i) const { return img_[i]; }
  const std::vector<unsigned>& images() const { return img_; }

  /// Apply *this first, then `next`.
  Permutation then(const Permutation& next) const {
    if (next.degree() != degree())
      throw std::invalid_argument("degree mismatch in composition");
    std::vector<unsigned> out(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) out[i] = next.img_[img_[i]];
    Permutation p;
    p.img_ = std::move(out);
    return p;
  }

  Permutation inverse() const {
    std::vector<unsigned> out(img_.size());
    for (unsigned i = 0; i < img_.size(); ++i) out[img_[i]] = i;
    Permutation p;
    p.img_ = std::move(out);
    return p;
  }

  bool is_identity() const {
    for (unsigned i = 0; i < img_.size(); ++i)
      if (img_[i] != i) return false;
    return true;
  }

  /// Element order = lcm of cycle lengths.
  std::uint64_t order() const {
    std::uint64_t ord = 1;
    std::vector<bool> seen(img_.size(), false);
    for (unsigned i = 0; i < img_.size(); ++i) {
      if (seen[i]) continue;
      std::uint64_t len = 0;
      for (unsigned j = i; !seen[j]; j = img_[j]) {
        seen[j] = true;
        ++len;
      }
      ord = std::lcm(ord, len);
    }
    return ord;
  }

  /// Nontrivial cycles; each starts at its minimal point, sorted by that point.
  std::vector<std::vector<unsigned>> cycles() const {
    std::vector<std::vector<unsigned>> out;
    std::vector<bool> seen(img_.size(), false);
    for (unsigned i = 0; i < img_.size(); ++i) {
      if (seen[i] || img_[i] == i) {
        seen[i] = true;
        continue;
      }
      std::vector<unsigned> cyc;
      for (unsigned j = i; !seen[j]; j = img_[j]) {
        seen[j] = true;
        cyc.push_back(j);
      }
      out.push_back(std::move(cyc));
    }
    return out;
  }

  /// 1-based disjoint-cycle notation, "()" for the identity.
  std::string to_cycle_string() const {
    auto cyc = cycles();
    if (cyc.empty()) return "()";
    std::string s;
    for (const auto& c : cyc) {
      s += '(';
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(c[i] + 1);
      }
      s += ')';
    }
    return s;
  }

  friend bool operator==(const Permutation& a, const Permutation& b) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) = default;

private:
  Permutation() = default;
  std::vector<unsigned> img_;
};

struct PermHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (unsigned v : p.images()) h = (h ^ v) * 0x100000001b3ull;
    return h;
  }
};

}  // namespace permfit
