#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "permfit/perm_group.hpp"

namespace permfit {
namespace builders {

inline GroupPtr cyclic(unsigned n, std::string label = "") {
  if (n == 0) throw std::invalid_argument("cyclic: n must be positive");
  if (label.empty()) label = "C" + std::to_string(n);
  std::vector<Permutation> gens;
  if (n > 1) {
    std::vector<unsigned> cyc(n);
    for (unsigned i = 0; i < n; ++i) cyc[i] = i;
    gens.push_back(Permutation::from_cycles(n, {cyc}));
  }
  return PermGroup::from_generators(std::max(n, 1u), std::move(gens), std::move(label));
}

/// Dihedral group of order 2n acting on n vertices (n >= 3).
inline GroupPtr dihedral(unsigned n, std::string label = "") {
  if (n < 3) throw std::invalid_argument("dihedral: need n >= 3 vertices");
  if (label.empty()) label = "D" + std::to_string(n);
  std::vector<unsigned> rot(n), flip(n);
  for (unsigned i = 0; i < n; ++i) {
    rot[i] = (i + 1) % n;
    flip[i] = (n - i) % n;
  }
  return PermGroup::from_generators(
      n, {Permutation(std::move(rot)), Permutation(std::move(flip))}, std::move(label));
}

inline GroupPtr symmetric(unsigned n, std::string label = "") {
  if (n == 0 || n > 7) throw std::invalid_argument("symmetric: need 1 <= n <= 7");
  if (label.empty()) label = "S" + std::to_string(n);
  std::vector<Permutation> gens;
  if (n >= 2) {
    std::vector<unsigned> cyc(n);
    for (unsigned i = 0; i < n; ++i) cyc[i] = i;
    gens.push_back(Permutation::from_cycles(n, {cyc}));
    gens.push_back(Permutation::from_cycles(n, {{0, 1}}));
  }
  return PermGroup::from_generators(std::max(n, 1u), std::move(gens), std::move(label));
}

inline GroupPtr alternating(unsigned n, std::string label = "") {
  if (n < 3 || n > 7) throw std::invalid_argument("alternating: need 3 <= n <= 7");
  if (label.empty()) label = "A" + std::to_string(n);
  std::vector<Permutation> gens{Permutation::from_cycles(n, {{0, 1, 2}})};
  if (n > 3) {
    std::vector<unsigned> cyc;
    if (n % 2) {
      for (unsigned i = 0; i < n; ++i) cyc.push_back(i);
    } else {
      for (unsigned i = 1; i < n; ++i) cyc.push_back(i);
    }
    gens.push_back(Permutation::from_cycles(n, {cyc}));
  }
  return PermGroup::from_generators(n, std::move(gens), std::move(label));
}

/// Quaternion group of order 8 in its regular representation on
/// {1,-1,i,-i,j,-j,k,-k}: the generators are right multiplication by i and j.
inline GroupPtr quaternion(std::string label = "Q8") {
  return PermGroup::from_generators(
      8,
      {Permutation::from_cycles(8, {{0, 2, 1, 3}, {4, 7, 5, 6}}),
       Permutation::from_cycles(8, {{0, 4, 1, 5}, {2, 6, 3, 7}})},
      std::move(label));
}

/// SL(2,3) acting on the 8 nonzero vectors of F_3^2.
inline GroupPtr sl23(std::string label = "SL(2,3)") {
  auto vec_index = [](unsigned x, unsigned y) {
    unsigned i = 3 * x + y;  // skip (0,0)
    return i - 1;
  };
  auto matrix_perm = [&](unsigned a, unsigned b, unsigned c, unsigned d) {
    std::vector<unsigned> img(8);
    for (unsigned x = 0; x < 3; ++x)
      for (unsigned y = 0; y < 3; ++y) {
        if (x == 0 && y == 0) continue;
        img[vec_index(x, y)] = vec_index((a * x + b * y) % 3, (c * x + d * y) % 3);
      }
    return Permutation(std::move(img));
  };
  return PermGroup::from_generators(8, {matrix_perm(1, 1, 0, 1), matrix_perm(0, 2, 1, 0)},
                                    std::move(label));
}

/// Elementary abelian group of order p^k: k disjoint p-cycles.
inline GroupPtr elementary_abelian(unsigned p, unsigned k, std::string label = "") {
  if (!is_prime(p)) throw std::invalid_argument("elementary_abelian: p must be prime");
  if (k == 0) throw std::invalid_argument("elementary_abelian: k must be positive");
  if (label.empty()) label = "E" + std::to_string(p) + "^" + std::to_string(k);
  unsigned degree = p * k;
  std::vector<Permutation> gens;
  for (unsigned block = 0; block < k; ++block) {
    std::vector<unsigned> cyc;
    for (unsigned i = 0; i < p; ++i) cyc.push_back(block * p + i);
    gens.push_back(Permutation::from_cycles(degree, {cyc}));
  }
  return PermGroup::from_generators(degree, std::move(gens), std::move(label));
}

/// Direct product on disjoint point sets.
inline GroupPtr direct_product(const GroupPtr& A, const GroupPtr& B, std::string label = "",
                               std::size_t element_bound = PermGroup::kDefaultElementBound) {
  if (label.empty()) label = A->label() + "x" + B->label();
  unsigned degree = A->degree() + B->degree();
  std::vector<Permutation> gens;
  auto embed = [&](const Permutation& p, unsigned shift) {
    std::vector<unsigned> img(degree);
    for (unsigned i = 0; i < degree; ++i) img[i] = i;
    for (unsigned i = 0; i < p.degree(); ++i) img[i + shift] = p[i] + shift;
    return Permutation(std::move(img));
  };
  for (const auto& g : A->generators()) gens.push_back(embed(g, 0));
  for (const auto& g : B->generators()) gens.push_back(embed(g, A->degree()));
  return PermGroup::from_generators(degree, std::move(gens), std::move(label), element_bound);
}

}  // namespace builders

/// A named catalog group with its construction recipe and expected order,
/// checked at construction.
struct CatalogEntry {
  std::string label;
  std::string construction;  // builtin recipe or "file <path>"
  GroupPtr group;
  std::uint64_t expected_order;
  bool soluble_hint;  // informational; suites recompute what they need
};

namespace detail {

inline CatalogEntry entry(GroupPtr g, std::string construction, std::uint64_t expected,
                          bool soluble) {
  if (g->order() != expected)
    throw std::logic_error("catalog group " + g->label() + " has order " +
                           std::to_string(g->order()) + ", expected " +
                           std::to_string(expected));
  return CatalogEntry{g->label(), std::move(construction), g, expected, soluble};
}

}  // namespace detail

/// Built-in verification catalog: soluble groups across the interesting prime
/// patterns plus non-soluble controls, all of order <= 500.
inline std::vector<CatalogEntry> default_catalog() {
  using namespace builders;
  namespace d = detail;
  std::vector<CatalogEntry> cat;
  cat.push_back(d::entry(cyclic(1, "C1"), "cyclic 1", 1, true));
  cat.push_back(d::entry(cyclic(2), "cyclic 2", 2, true));
  cat.push_back(d::entry(cyclic(3), "cyclic 3", 3, true));
  cat.push_back(d::entry(cyclic(4), "cyclic 4", 4, true));
  cat.push_back(d::entry(elementary_abelian(2, 2, "V4"), "elementary abelian 2^2", 4, true));
  cat.push_back(d::entry(cyclic(6), "cyclic 6", 6, true));
  cat.push_back(d::entry(symmetric(3), "symmetric 3", 6, true));
  cat.push_back(d::entry(cyclic(7), "cyclic 7", 7, true));
  cat.push_back(d::entry(dihedral(4), "dihedral 4", 8, true));
  cat.push_back(d::entry(quaternion(), "quaternion", 8, true));
  cat.push_back(d::entry(elementary_abelian(2, 3, "E8"), "elementary abelian 2^3", 8, true));
  cat.push_back(d::entry(cyclic(9), "cyclic 9", 9, true));
  cat.push_back(d::entry(elementary_abelian(3, 2, "E9"), "elementary abelian 3^2", 9, true));
  cat.push_back(d::entry(dihedral(5), "dihedral 5", 10, true));
  cat.push_back(d::entry(cyclic(12), "cyclic 12", 12, true));
  cat.push_back(d::entry(alternating(4), "alternating 4", 12, true));
  cat.push_back(d::entry(dihedral(6), "dihedral 6", 12, true));
  cat.push_back(d::entry(cyclic(15), "cyclic 15", 15, true));
  cat.push_back(d::entry(symmetric(4), "symmetric 4", 24, true));
  cat.push_back(d::entry(sl23(), "SL(2,3)", 24, true));
  cat.push_back(d::entry(direct_product(quaternion(), cyclic(3)), "quaternion x cyclic 3",
                         24, true));
  cat.push_back(d::entry(direct_product(symmetric(3), cyclic(5)), "symmetric 3 x cyclic 5",
                         30, true));
  cat.push_back(d::entry(direct_product(symmetric(3), cyclic(7)), "symmetric 3 x cyclic 7",
                         42, true));
  cat.push_back(d::entry(direct_product(symmetric(4), cyclic(5)), "symmetric 4 x cyclic 5",
                         120, true));
  cat.push_back(d::entry(alternating(5), "alternating 5", 60, false));
  cat.push_back(d::entry(symmetric(5), "symmetric 5", 120, false));
  cat.push_back(d::entry(direct_product(alternating(5), cyclic(7)),
                         "alternating 5 x cyclic 7", 420, false));
  return cat;
}

inline const CatalogEntry* find_entry(const std::vector<CatalogEntry>& cat,
                                      const std::string& label) {
  for (const auto& e : cat)
    if (e.label == label) return &e;
  return nullptr;
}

}  // namespace permfit
