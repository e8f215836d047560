#pragma once

// Test-only brute-force oracles, deliberately independent of the library's
// multiplication tables and join-closure enumeration: raw image-vector
// composition and subset-seeded closures.

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

namespace naive {

using Image = std::vector<unsigned>;

inline Image compose(const Image& a, const Image& b) {  // apply a, then b
  Image out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = b[a[i]];
  return out;
}

inline Image identity(unsigned degree) {
  Image out(degree);
  for (unsigned i = 0; i < degree; ++i) out[i] = i;
  return out;
}

inline std::set<Image> closure(const std::vector<Image>& gens, unsigned degree) {
  std::set<Image> seen{identity(degree)};
  std::vector<Image> todo{identity(degree)};
  while (!todo.empty()) {
    Image cur = todo.back();
    todo.pop_back();
    for (const auto& g : gens) {
      Image next = compose(cur, g);
      if (seen.insert(next).second) todo.push_back(next);
    }
  }
  return seen;
}

/// Every subgroup of the given element set, as sorted element lists. Seeds
/// every generating subset of size <= 4: a subgroup with k independent
/// generators has order >= 2^k, so 4 generators cover all orders < 32.
inline std::set<std::vector<Image>> all_subgroups(const std::vector<Image>& elements,
                                                  unsigned degree) {
  if (elements.size() > 31)
    throw std::invalid_argument("naive oracle only supports order <= 31");
  const std::size_t n = elements.size();
  std::set<std::vector<Image>> found;
  auto record = [&](const std::vector<Image>& gens) {
    std::set<Image> sub = closure(gens, degree);
    found.insert(std::vector<Image>(sub.begin(), sub.end()));
  };
  record({});
  for (std::size_t a = 0; a < n; ++a) {
    record({elements[a]});
    for (std::size_t b = a + 1; b < n; ++b) {
      record({elements[a], elements[b]});
      for (std::size_t c = b + 1; c < n; ++c) {
        record({elements[a], elements[b], elements[c]});
        for (std::size_t d = c + 1; d < n; ++d)
          record({elements[a], elements[b], elements[c], elements[d]});
      }
    }
  }
  return found;
}

}  // namespace naive
