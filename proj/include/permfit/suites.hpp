#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "permfit/catalog.hpp"
#include "permfit/hfunction.hpp"
#include "permfit/injectors.hpp"

namespace permfit {

/// Test matrices and bounds for the verification suites. The pi matrix covers
/// singleton, multi-prime, cofinite and nonsoluble-radical cases; the X matrix
/// covers the trivial, nilpotent and pi-group radicals.
struct VerifyConfig {
  std::vector<PrimeSet> pi_list;
  std::vector<ClassExpr> x_list;
  std::vector<unsigned> p_list;
  std::vector<unsigned> k_list;
  std::uint64_t max_order = 500;
  std::size_t subgroup_bound = PermGroup::kDefaultSubgroupBound;

  static VerifyConfig defaults() {
    VerifyConfig c;
    c.pi_list = {PrimeSet::finite({2}),    PrimeSet::finite({3}),
                 PrimeSet::finite({2, 3}), PrimeSet::finite({2, 5}),
                 PrimeSet::finite({7}),    PrimeSet::cofinite({2})};
    c.x_list = {cls::trivial(), cls::nilpotent(), cls::pi_groups(PrimeSet::finite({2, 3, 5}))};
    c.p_list = {2, 3, 5, 7};
    c.k_list = {1, 2, 3};
    return c;
  }
};

struct GroupRecord {
  enum class Status { Pass, Fail, Skipped };
  std::string label;
  Status status = Status::Skipped;
  std::string details;
  std::vector<std::uint64_t> injector_orders;
  std::optional<std::size_t> class_count;
};

struct SuiteResult {
  std::string id;
  std::vector<GroupRecord> records;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
  double wall_seconds = 0.0;
};

inline const char* to_string(GroupRecord::Status s) {
  switch (s) {
    case GroupRecord::Status::Pass: return "pass";
    case GroupRecord::Status::Fail: return "fail";
    case GroupRecord::Status::Skipped: return "skipped";
  }
  return "?";
}

namespace detail {

/// Collects per-case outcomes for one group; a record passes when at least
/// one case ran and none failed, and is skipped when every case was.
class CaseLog {
public:
  explicit CaseLog(std::string label) : label_(std::move(label)) {}

  void pass(const std::string& text) {
    ++ran_;
    parts_.push_back(text);
  }

  void fail(const std::string& text) {
    ++ran_;
    ++failed_;
    parts_.push_back("FAIL " + text);
  }

  void skip(const std::string& text) { parts_.push_back("skip " + text); }

  /// Runs a case body, translating hypothesis violations into skips and any
  /// other exception into a failure.
  template <typename F>
  void run(const std::string& name, F&& body) {
    try {
      body(*this, name);
    } catch (const HypothesisError& e) {
      skip(name + ": " + e.what());
    } catch (const std::exception& e) {
      fail(name + ": " + e.what());
    }
  }

  void note_injectors(const InjectorReport& rep) {
    if (!seen_injectors_) {
      seen_injectors_ = true;
      orders_ = rep.injectors.orders();
      class_count_ = rep.conjugacy_class_count;
    }
  }

  bool any_failed() const { return failed_ > 0; }

  GroupRecord finish() const {
    GroupRecord rec;
    rec.label = label_;
    rec.status = failed_ ? GroupRecord::Status::Fail
                         : (ran_ ? GroupRecord::Status::Pass : GroupRecord::Status::Skipped);
    std::string d;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) d += "; ";
      d += parts_[i];
    }
    rec.details = std::move(d);
    rec.injector_orders = orders_;
    rec.class_count = class_count_;
    return rec;
  }

private:
  std::string label_;
  std::vector<std::string> parts_;
  std::size_t ran_ = 0;
  std::size_t failed_ = 0;
  bool seen_injectors_ = false;
  std::vector<std::uint64_t> orders_;
  std::optional<std::size_t> class_count_;
};

inline std::string fmt_orders(const std::vector<std::uint64_t>& orders) {
  std::string s = "[";
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(orders[i]);
  }
  return s + "]";
}

/// Classes whose injectors the theorem suites exercise.
inline std::vector<ClassExpr> injector_class_matrix(const VerifyConfig& cfg) {
  std::vector<ClassExpr> out{cls::nilpotent()};
  for (const auto& pi : cfg.pi_list) out.push_back(cls::nilpotent_pi(pi));
  for (const auto& pi : cfg.pi_list) out.push_back(cls::pi_nilpotent(pi));
  for (const auto& x : cfg.x_list)
    for (const auto& pi : cfg.pi_list) out.push_back(cls::hartley(x, pi));
  return out;
}

/// Wider matrix for the Fitting-axiom checks.
inline std::vector<ClassExpr> fitting_class_matrix(const VerifyConfig& cfg) {
  std::vector<ClassExpr> out{cls::trivial(), cls::all(), cls::soluble(), cls::nilpotent()};
  for (const auto& pi : cfg.pi_list) {
    out.push_back(cls::pi_groups(pi));
    out.push_back(cls::nilpotent_pi(pi));
    out.push_back(cls::pi_nilpotent(pi));
    out.push_back(cls::pi_soluble(pi));
  }
  for (const auto& x : cfg.x_list)
    for (const auto& pi : cfg.pi_list) {
      out.push_back(cls::hartley(x, pi));
      out.push_back(cls::product(x, cls::pi_nilpotent(pi)));
    }
  return out;
}

/// Subgroup of a materialized group corresponding to a parent-space set.
inline IndexSet members_in_materialized(const GroupPtr& parent, const GroupPtr& sub,
                                        const IndexSet& parent_members) {
  if (parent == sub) return parent_members;
  IndexSet out(sub->order());
  parent_members.for_each([&](std::size_t i) {
    out.set(*sub->index_of(parent->element(i)));
  });
  return out;
}

// --- individual suites ------------------------------------------------------

inline GroupRecord suite_sylow_sanity(const GroupPtr& G, const VerifyConfig& cfg) {
  CaseLog log(G->label());
  log.run("lattice", [&](CaseLog& l, const std::string& name) {
    SubgroupSet all = subgroups(G, cfg.subgroup_bound);
    for (const auto& s : all) {
      if (G->order() % s.order() != 0)
        return l.fail(name + ": subgroup order " + std::to_string(s.order()) +
                      " violates Lagrange");
      if (!(product_set(*G, s.members(), s.members()) == s.members()))
        return l.fail(name + ": subgroup of order " + std::to_string(s.order()) +
                      " is not closed");
    }
    l.pass(name + ": " + std::to_string(all.size()) + " subgroups, Lagrange+closure ok");
  });
  for (unsigned p : G->prime_support()) {
    log.run("p=" + std::to_string(p), [&](CaseLog& l, const std::string& name) {
      SubgroupSet syl = sylow(G, p, cfg.subgroup_bound);
      if (syl.empty()) return l.fail(name + ": no Sylow subgroup");
      std::size_t classes = conjugacy_class_count(syl);
      if (classes != 1)
        return l.fail(name + ": " + std::to_string(classes) + " conjugacy classes");
      l.pass(name + ": " + std::to_string(syl.size()) + " Sylow of order " +
             std::to_string(syl[0].order()));
    });
  }
  // a prime outside sigma(G) must yield exactly the trivial subgroup
  log.run("p-coprime", [&](CaseLog& l, const std::string& name) {
    unsigned p = 2;
    while (G->order() % p == 0 || !is_prime(p)) ++p;
    SubgroupSet syl = sylow(G, p, cfg.subgroup_bound);
    if (syl.size() != 1 || syl[0].order() != 1)
      return l.fail(name + ": Sylow for p=" + std::to_string(p) +
                    " is not the trivial subgroup");
    l.pass(name + ": p=" + std::to_string(p) + " -> trivial");
  });
  return log.finish();
}

inline GroupRecord suite_fitting_axioms(const GroupPtr& G, const VerifyConfig& cfg) {
  CaseLog log(G->label());
  const auto& normals = cached_normals(*G);
  for (const auto& C : fitting_class_matrix(cfg)) {
    log.run("C=" + C.to_string(), [&](CaseLog& l, const std::string& name) {
      if (member(G, C)) {
        for (const auto& N : normals)
          if (!member(Subgroup(G, N), C))
            return l.fail(name + ": normal subgroup of order " + std::to_string(N.count()) +
                          " escapes the class");
      }
      std::vector<IndexSet> normal_members;
      for (const auto& N : normals)
        if (member(Subgroup(G, N), C)) normal_members.push_back(N);
      for (std::size_t i = 0; i < normal_members.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) {
          IndexSet prod = product_set(*G, normal_members[i], normal_members[j]);
          if (!member(Subgroup(G, prod), C))
            return l.fail(name + ": product of normal members escapes the class");
        }
      Subgroup R = radical(G, C);
      if (!member(R, C)) return l.fail(name + ": radical is not a member");
      if (!(radical_of(R, C) == R)) return l.fail(name + ": radical is not idempotent");
      l.pass(name + ": ok radical=" + std::to_string(R.order()));
    });
  }
  // residual/radical duality for the quotient-stable nodes
  std::vector<ClassExpr> stable{cls::nilpotent()};
  for (const auto& pi : cfg.pi_list) {
    stable.push_back(cls::pi_groups(pi));
    stable.push_back(cls::pi_nilpotent(pi));
  }
  for (unsigned p : cfg.p_list) stable.push_back(cls::p_groups(p));
  for (const auto& C : stable) {
    log.run("res C=" + C.to_string(), [&](CaseLog& l, const std::string& name) {
      Subgroup R = residual(G, C);
      Quotient q = quotient(G, R);
      if (!member(q.group, C)) return l.fail(name + ": quotient by residual not a member");
      for (const auto& N : normals) {
        Quotient qn = quotient(G, Subgroup(G, N));
        if (member(qn.group, C) && !R.members().subset_of(N))
          return l.fail(name + ": residual not minimal");
      }
      l.pass(name + ": residual=" + std::to_string(R.order()));
    });
  }
  // radicals under class products: for members of hartley(X;pi) the
  // Np(q)-residual lands inside the prod(X,Epi(q'))-radical
  for (const auto& x : cfg.x_list)
    for (const auto& pi : cfg.pi_list) {
      ClassExpr H = cls::hartley(x, pi);
      log.run("spot C=" + H.to_string(), [&](CaseLog& l, const std::string& name) {
        if (!member(G, H)) return l.skip(name + ": not a member");
        for (unsigned q : pi.intersect(G->prime_support())) {
          Subgroup res = residual(G, cls::p_groups(q));
          Subgroup rad = radical(G, cls::product(x, cls::pi_groups(PrimeSet::cofinite({q}))));
          if (!res.members().subset_of(rad.members()))
            return l.fail(name + ": q=" + std::to_string(q) +
                          " residual escapes the radical");
        }
        l.pass(name + ": ok");
      });
    }
  return log.finish();
}

inline GroupRecord suite_thm_1_1(const GroupPtr& G, const VerifyConfig& cfg) {
  CaseLog log(G->label());
  if (!member(G, cls::soluble())) {
    log.skip("not soluble");
    return log.finish();
  }
  for (const auto& C : injector_class_matrix(cfg)) {
    log.run("C=" + C.to_string(), [&](CaseLog& l, const std::string& name) {
      InjectorReport rep = injectors_oracle(G, C, cfg.subgroup_bound);
      l.note_injectors(rep);
      if (rep.injectors.empty()) return l.fail(name + ": no injector");
      if (rep.conjugacy_class_count != 1)
        return l.fail(name + ": " + std::to_string(rep.conjugacy_class_count) +
                      " conjugacy classes");
      l.pass(name + ": inj=" + fmt_orders(rep.injectors.orders()));
    });
  }
  return log.finish();
}

inline GroupRecord suite_lem_2_1(const GroupPtr& G, const VerifyConfig& cfg) {
  CaseLog log(G->label());
  for (const auto& pi : cfg.pi_list) {
    log.run("pi=" + pi.to_string(), [&](CaseLog& l, const std::string& name) {
      if (!member(G, cls::pi_soluble(pi))) return l.skip(name + ": not pi-soluble");
      Subgroup fpi = radical(G, cls::pi_nilpotent(pi));
      if (!centralizer(fpi).members().subset_of(fpi.members()))
        return l.fail(name + ": centralizer escapes the pi-Fitting subgroup");
      Subgroup opip = radical(G, cls::pi_groups(pi.complement()));
      if (opip.is_trivial()) {
        Subgroup opi = radical(G, cls::pi_groups(pi));
        if (!centralizer(opi).members().subset_of(opi.members()))
          return l.fail(name + ": pi-constraint fails with trivial pi'-radical");
      }
      l.pass(name + ": constrained, F_pi=" + std::to_string(fpi.order()));
    });
  }
  return log.finish();
}

inline GroupRecord suite_lem_2_2(const GroupPtr& G, const VerifyConfig& cfg) {
  CaseLog log(G->label());
  const auto& normals = cached_normals(*G);
  for (const auto& C : injector_class_matrix(cfg)) {
    log.run("C=" + C.to_string(), [&](CaseLog& l, const std::string& name) {
      InjectorReport rep = injectors_oracle(G, C, cfg.subgroup_bound);
      if (rep.injectors.empty()) return l.pass(name + ": empty (nothing to check)");
      Subgroup R = radical(G, C);
      SubgroupSet maximal = f_maximal_subgroups(G, C, cfg.subgroup_bound);
      for (const auto& V : rep.injectors) {
        if (!R.members().subset_of(V.members()))
          return l.fail(name + ": injector misses the radical");
        if (!maximal.contains(V.members()))
          return l.fail(name + ": injector is not class-maximal");
        for (const auto& K : normals) {
          if (K.count() == G->order()) continue;
          GroupPtr Kg = Subgroup(G, K).as_group();
          InjectorReport repK = injectors_oracle(Kg, C, cfg.subgroup_bound);
          IndexSet vk = members_in_materialized(G, Kg, V.members() & K);
          if (!repK.injectors.contains(vk))
            return l.fail(name + ": V cap K is not an injector of a normal K of order " +
                          std::to_string(K.count()));
        }
      }
      l.pass(name + ": " + std::to_string(rep.injectors.size()) + " injectors checked");
    });
  }
  return log.finish();
}

inline GroupRecord suite_lem_2_3(const GroupPtr& G, const VerifyConfig& cfg) {
  CaseLog log(G->label());
  std::vector<ClassExpr> classes{cls::trivial(), cls::soluble(), cls::nilpotent()};
  for (const auto& pi : cfg.pi_list) {
    classes.push_back(cls::pi_groups(pi));
    classes.push_back(cls::pi_nilpotent(pi));
  }
  const auto& subnormals = cached_subnormals(*G);
  for (const auto& C : classes) {
    log.run("C=" + C.to_string(), [&](CaseLog& l, const std::string& name) {
      Subgroup R = radical(G, C);
      for (const auto& N : subnormals) {
        Subgroup rn = radical_of(Subgroup(G, N), C);
        if (!(rn.members() == (N & R.members())))
          return l.fail(name + ": subnormal of order " + std::to_string(N.count()) +
                        ": N_F != N cap G_F");
      }
      l.pass(name + ": " + std::to_string(subnormals.size()) + " subnormals ok");
    });
  }
  // part 2: the H-radical of G/G_F is G_{FH}/G_F
  for (const auto& x : cfg.x_list) {
    std::vector<ClassExpr> hs{cls::nilpotent()};
    for (const auto& pi : cfg.pi_list) hs.push_back(cls::pi_nilpotent(pi));
    for (const auto& H : hs) {
      log.run("F=" + x.to_string() + " H=" + H.to_string(),
              [&](CaseLog& l, const std::string& name) {
                Subgroup RF = radical(G, x);
                Quotient q = quotient(G, RF);
                Subgroup lhs = radical(q.group, H);
                Subgroup rhs = radical(G, cls::product(x, H));
                if (!(project_subgroup(q, rhs.members()) == lhs.members()))
                  return l.fail(name + ": quotient radical mismatch");
                l.pass(name + ": ok");
              });
    }
  }
  return log.finish();
}

inline GroupRecord suite_lem_2_4(const GroupPtr& G, const VerifyConfig& cfg) {
  CaseLog log(G->label());
  for (const auto& pi : cfg.pi_list) {
    log.run("pi=" + pi.to_string(), [&](CaseLog& l, const std::string& name) {
      if (!member(G, cls::pi_soluble(pi))) return l.skip(name + ": not pi-soluble");
      SubgroupSet halls = hall_subgroups(G, pi, cfg.subgroup_bound);
      if (halls.empty()) return l.fail(name + ": no Hall subgroup");
      std::size_t classes = conjugacy_class_count(halls);
      if (classes != 1)
        return l.fail(name + ": " + std::to_string(classes) + " conjugacy classes");
      // every pi-subgroup must land inside some Hall pi-subgroup
      SubgroupSet all = subgroups(G, cfg.subgroup_bound);
      for (const auto& H : all) {
        bool is_pi = true;
        for (unsigned p : H.prime_support())
          if (!pi.contains(p)) is_pi = false;
        if (!is_pi) continue;
        bool inside = false;
        for (const auto& hall : halls)
          if (H.members().subset_of(hall.members())) inside = true;
        if (!inside)
          return l.fail(name + ": pi-subgroup of order " + std::to_string(H.order()) +
                        " is in no Hall subgroup");
      }
      l.pass(name + ": " + std::to_string(halls.size()) + " Hall of order " +
             std::to_string(halls[0].order()));
    });
  }
  return log.finish();
}

inline GroupRecord suite_lem_3_1(const GroupPtr& G, const VerifyConfig& cfg) {
  CaseLog log(G->label());
  for (const auto& pi : cfg.pi_list) {
    log.run("pi=" + pi.to_string(), [&](CaseLog& l, const std::string& name) {
      InjectorReport rep = pi_nilpotent_injectors_constructive(G, pi, cfg.subgroup_bound);
      l.note_injectors(rep);
      if (rep.agreement != std::optional<bool>(true))
        return l.fail(name + ": constructive set differs from the oracle");
      if (rep.conjugacy_class_count != 1)
        return l.fail(name + ": " + std::to_string(rep.conjugacy_class_count) +
                      " conjugacy classes");
      l.pass(name + ": inj=" + fmt_orders(rep.injectors.orders()));
    });
  }
  return log.finish();
}

inline GroupRecord suite_cor_3_2(const GroupPtr& G, const VerifyConfig& cfg) {
  CaseLog log(G->label());
  for (unsigned p : cfg.p_list) {
    log.run("p=" + std::to_string(p), [&](CaseLog& l, const std::string& name) {
      InjectorReport rep = p_nilpotent_injectors(G, p, cfg.subgroup_bound);
      l.note_injectors(rep);
      if (rep.agreement != std::optional<bool>(true))
        return l.fail(name + ": constructive set differs from the oracle");
      if (rep.conjugacy_class_count != 1)
        return l.fail(name + ": " + std::to_string(rep.conjugacy_class_count) +
                      " conjugacy classes");
      l.pass(name + ": inj=" + fmt_orders(rep.injectors.orders()));
    });
  }
  return log.finish();
}

inline GroupRecord suite_lem_3_4(const GroupPtr& G, const VerifyConfig& cfg) {
  CaseLog log(G->label());
  for (const auto& x : cfg.x_list)
    for (const auto& pi : cfg.pi_list) {
      log.run("x=" + x.to_string() + " pi=" + pi.to_string(),
              [&](CaseLog& l, const std::string& name) {
                if (!member(G, cls::product(x, cls::pi_soluble(pi))))
                  return l.skip(name + ": hypothesis fails");
                ClassExpr H = cls::hartley(x, pi);
                Subgroup gh = h_radical(G, HFunction::invariable(x, pi));
                Subgroup gH = radical(G, H);
                Quotient q = quotient(G, gh);
                Subgroup fpi_q = radical(q.group, cls::pi_nilpotent(pi));
                if (!(project_subgroup(q, gH.members()) == fpi_q.members()))
                  return l.fail(name + ": G_H/G_h differs from F_pi(G/G_h)");
                SubgroupSet all = subgroups(G, cfg.subgroup_bound);
                for (const auto& V : all) {
                  if (!gH.members().subset_of(V.members())) continue;
                  bool in_H = member(V, H);
                  Subgroup image(q.group, project_subgroup(q, V.members()));
                  bool img_pinil = member(image, cls::pi_nilpotent(pi));
                  if (in_H != img_pinil)
                    return l.fail(name + ": membership equivalence fails for order " +
                                  std::to_string(V.order()));
                }
                l.pass(name + ": ok G_H=" + std::to_string(gH.order()));
              });
    }
  return log.finish();
}

inline GroupRecord suite_thm_1_5(const GroupPtr& G, const VerifyConfig& cfg) {
  CaseLog log(G->label());
  for (const auto& x : cfg.x_list)
    for (const auto& pi : cfg.pi_list) {
      log.run("x=" + x.to_string() + " pi=" + pi.to_string(),
              [&](CaseLog& l, const std::string& name) {
                if (!member(G, cls::product(x, cls::pi_soluble(pi))))
                  return l.skip(name + ": hypothesis fails");
                InjectorReport rep =
                    hartley_injectors_constructive(G, x, pi, cfg.subgroup_bound);
                l.note_injectors(rep);
                if (rep.agreement != std::optional<bool>(true))
                  return l.fail(name + ": constructive set differs from the oracle");
                if (rep.conjugacy_class_count != 1)
                  return l.fail(name + ": " + std::to_string(rep.conjugacy_class_count) +
                                " conjugacy classes");
                for (std::size_t i = 0; i < rep.injectors.size(); ++i) {
                  const auto& dec = rep.decomposition[i];
                  if (!dec) return l.fail(name + ": missing decomposition");
                  IndexSet recomputed = product_set(*G, dec->radical_part.members(),
                                                    dec->complement_part.members());
                  if (!(recomputed == rep.injectors[i].members()))
                    return l.fail(name + ": decomposition product mismatch");
                }
                l.pass(name + ": inj=" + fmt_orders(rep.injectors.orders()));
              });
    }
  return log.finish();
}

inline GroupRecord suite_cor_1_5_1(const GroupPtr& G, const VerifyConfig& cfg) {
  CaseLog log(G->label());
  for (const auto& x : cfg.x_list)
    for (const auto& pi : cfg.pi_list) {
      log.run("x=" + x.to_string() + " pi=" + pi.to_string(),
              [&](CaseLog& l, const std::string& name) {
                bool lhs = member(G, cls::hartley(x, pi));
                bool rhs = member(G, cls::product(x, cls::pi_nilpotent(pi)));
                if (lhs != rhs) return l.fail(name + ": membership equivalence fails");
                l.pass(name + (lhs ? ": member" : ": non-member"));
              });
    }
  return log.finish();
}

inline GroupRecord suite_cor_1_5_2(const GroupPtr& G, const VerifyConfig& cfg) {
  CaseLog log(G->label());
  for (const auto& pi : cfg.pi_list)
    for (unsigned k : cfg.k_list) {
      log.run("pi=" + pi.to_string() + " k=" + std::to_string(k),
              [&](CaseLog& l, const std::string& name) {
                InjectorReport rep = iterated_class_injectors(G, pi, k, cfg.subgroup_bound);
                l.note_injectors(rep);
                if (rep.agreement != std::optional<bool>(true))
                  return l.fail(name + ": constructive set differs from the oracle");
                if (rep.conjugacy_class_count != 1)
                  return l.fail(name + ": " + std::to_string(rep.conjugacy_class_count) +
                                " conjugacy classes");
                l.pass(name + ": inj=" + fmt_orders(rep.injectors.orders()));
              });
    }
  return log.finish();
}

inline GroupRecord suite_cor_1_5_4(const GroupPtr& G, const VerifyConfig& cfg) {
  CaseLog log(G->label());
  for (unsigned p : cfg.p_list) {
    log.run("p=" + std::to_string(p), [&](CaseLog& l, const std::string& name) {
      InjectorReport rep = p_nilpotent_injectors(G, p, cfg.subgroup_bound);
      l.note_injectors(rep);
      ClassExpr pnil = cls::pi_nilpotent(PrimeSet::finite({p}));
      Subgroup R = radical(G, pnil);
      SubgroupSet maximal = f_maximal_subgroups(G, pnil, cfg.subgroup_bound);
      for (const auto& V : rep.injectors) {
        if (!R.members().subset_of(V.members()))
          return l.fail(name + ": injector misses the p-nilpotent radical");
        if (!maximal.contains(V.members()))
          return l.fail(name + ": injector is not a maximal p-nilpotent subgroup");
      }
      if (rep.conjugacy_class_count != 1)
        return l.fail(name + ": " + std::to_string(rep.conjugacy_class_count) +
                      " conjugacy classes");
      l.pass(name + ": inj=" + fmt_orders(rep.injectors.orders()));
    });
  }
  return log.finish();
}

/// Exploratory only: pi-nilpotent injector behavior on constrained groups
/// outside pi-solubility. Reports findings, asserts nothing.
inline GroupRecord suite_q_3_1(const GroupPtr& G, const VerifyConfig& cfg) {
  CaseLog log(G->label());
  for (const auto& pi : cfg.pi_list) {
    log.run("pi=" + pi.to_string(), [&](CaseLog& l, const std::string& name) {
      if (member(G, cls::pi_soluble(pi))) return l.skip(name + ": pi-soluble (covered)");
      Subgroup fpi = radical(G, cls::pi_nilpotent(pi));
      if (!centralizer(fpi).members().subset_of(fpi.members()))
        return l.skip(name + ": not constrained");
      InjectorReport rep = injectors_oracle(G, cls::pi_nilpotent(pi), cfg.subgroup_bound);
      l.note_injectors(rep);
      l.pass(name + ": injectors=" + std::to_string(rep.injectors.size()) +
             " classes=" + std::to_string(rep.conjugacy_class_count));
    });
  }
  return log.finish();
}

}  // namespace detail

/// Suite ids in canonical execution order; "q-3.1" is exploratory and is run
/// only when named explicitly.
inline const std::vector<std::string>& suite_ids() {
  static const std::vector<std::string> ids{
      "sylow-sanity", "fitting-axioms", "thm-1.1", "lem-2.1", "lem-2.2",
      "lem-2.3",      "lem-2.4",        "lem-3.1", "cor-3.2", "lem-3.4",
      "thm-1.5",      "cor-1.5.1",      "cor-1.5.2", "cor-1.5.4"};
  return ids;
}

inline SuiteResult run_suite(const std::string& id,
                             const std::vector<CatalogEntry>& catalog,
                             const VerifyConfig& cfg) {
  using PerGroup = GroupRecord (*)(const GroupPtr&, const VerifyConfig&);
  PerGroup fn = nullptr;
  if (id == "sylow-sanity") fn = detail::suite_sylow_sanity;
  else if (id == "fitting-axioms") fn = detail::suite_fitting_axioms;
  else if (id == "thm-1.1") fn = detail::suite_thm_1_1;
  else if (id == "lem-2.1") fn = detail::suite_lem_2_1;
  else if (id == "lem-2.2") fn = detail::suite_lem_2_2;
  else if (id == "lem-2.3") fn = detail::suite_lem_2_3;
  else if (id == "lem-2.4") fn = detail::suite_lem_2_4;
  else if (id == "lem-3.1") fn = detail::suite_lem_3_1;
  else if (id == "cor-3.2") fn = detail::suite_cor_3_2;
  else if (id == "lem-3.4") fn = detail::suite_lem_3_4;
  else if (id == "thm-1.5") fn = detail::suite_thm_1_5;
  else if (id == "cor-1.5.1") fn = detail::suite_cor_1_5_1;
  else if (id == "cor-1.5.2") fn = detail::suite_cor_1_5_2;
  else if (id == "cor-1.5.4") fn = detail::suite_cor_1_5_4;
  else if (id == "q-3.1") fn = detail::suite_q_3_1;
  else throw DomainError("unknown suite id: " + id);

  auto start = std::chrono::steady_clock::now();
  SuiteResult result;
  result.id = id;
  for (const auto& entry : catalog) {
    if (entry.group->order() > cfg.max_order) continue;
    GroupRecord rec;
    if (entry.group->order() > cfg.subgroup_bound) {
      rec.label = entry.label;
      rec.status = GroupRecord::Status::Skipped;
      rec.details = "skip order " + std::to_string(entry.group->order()) +
                    " exceeds the subgroup bound " + std::to_string(cfg.subgroup_bound);
    } else {
      rec = fn(entry.group, cfg);
    }
    switch (rec.status) {
      case GroupRecord::Status::Pass: ++result.passed; break;
      case GroupRecord::Status::Fail: ++result.failed; break;
      case GroupRecord::Status::Skipped: ++result.skipped; break;
    }
    result.records.push_back(std::move(rec));
  }
  result.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

inline std::vector<SuiteResult> run_all(const std::vector<CatalogEntry>& catalog,
                                        const VerifyConfig& cfg) {
  std::vector<SuiteResult> out;
  for (const auto& id : suite_ids()) out.push_back(run_suite(id, catalog, cfg));
  return out;
}

}  // namespace permfit
