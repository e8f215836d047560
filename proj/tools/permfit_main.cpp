// permfit command-line interface: catalog inspection, group-file ingestion,
// radicals, injectors and the verification suites.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "permfit/permfit.hpp"

namespace {

using namespace permfit;

struct CliOptions {
  std::string config_path;
  ConfigOverrides flags;
};

struct Session {
  std::vector<CatalogEntry> catalog;
  VerifyConfig verify_cfg;
  std::size_t element_bound = PermGroup::kDefaultElementBound;
};

/// Merge config file and flags (flags win) and assemble the session catalog.
Session build_session(const CliOptions& opts) {
  std::map<std::string, std::string> file_kv;
  if (!opts.config_path.empty()) file_kv = read_config_file(opts.config_path);
  SessionConfig cfg = build_session_config(file_kv, opts.flags);

  Session s;
  s.verify_cfg = cfg.verify;
  s.element_bound = cfg.element_bound;
  s.catalog = default_catalog();
  for (const auto& path : cfg.ingest_paths) {
    GroupPtr g = read_group_file(path, s.element_bound);
    s.catalog.push_back(CatalogEntry{g->label(), "file " + path, g, g->order(), false});
  }
  return s;
}

GroupPtr require_group(const Session& s, const std::string& label) {
  const CatalogEntry* entry = find_entry(s.catalog, label);
  if (!entry) throw std::runtime_error("no catalog group labelled '" + label + "'");
  return entry->group;
}

std::string describe_subgroup(const Subgroup& H) {
  std::string out = "order " + std::to_string(H.order()) + ", generated by ";
  std::vector<std::size_t> gens = generating_subset(*H.parent(), H.members());
  if (gens.empty()) return out + "()";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) out += " ";
    out += H.parent()->element(gens[i]).to_cycle_string();
  }
  return out;
}

int cmd_groups_list(const Session& s) {
  for (const auto& entry : s.catalog)
    std::cout << entry.label << "  order " << entry.group->order() << "  degree "
              << entry.group->degree() << "  (" << entry.construction << ")\n";
  return 0;
}

int cmd_groups_show(const Session& s, const std::string& label) {
  GroupPtr g = require_group(s, label);
  std::cout << to_group_file(*g);
  std::cout << "order " << g->order() << "\n";
  std::cout << "primes";
  for (unsigned p : g->prime_support()) std::cout << " " << p;
  std::cout << "\n";
  if (g->order() <= PermGroup::kDefaultSubgroupBound) {
    std::cout << "subgroups " << subgroups(g).size() << "\n";
    std::cout << "abelian " << (g->is_abelian() ? "yes" : "no") << "\n";
  }
  return 0;
}

int cmd_ingest(const Session& s, const std::string& path) {
  GroupPtr g = read_group_file(path, s.element_bound);
  std::cout << "ingested " << g->label() << ": degree " << g->degree() << ", order "
            << g->order() << ", primes";
  for (unsigned p : g->prime_support()) std::cout << " " << p;
  std::cout << "\n";
  return 0;
}

int cmd_radical(const Session& s, const std::string& label, const std::string& class_text) {
  GroupPtr g = require_group(s, label);
  ClassExpr c = parse_class_expr(class_text);
  Subgroup r = radical(g, c);
  std::cout << "radical of " << label << " for " << c.to_string() << ": "
            << describe_subgroup(r) << "\n";
  return 0;
}

int cmd_injectors(const Session& s, const std::string& label, const std::string& class_text,
                  const std::string& method) {
  GroupPtr g = require_group(s, label);
  ClassExpr c = parse_class_expr(class_text);
  InjectorReport rep;
  if (method == "oracle") {
    rep = injectors_oracle(g, c, s.verify_cfg.subgroup_bound);
  } else if (method == "construct") {
    rep = constructive_injectors(g, c, s.verify_cfg.subgroup_bound);
  } else {
    throw std::runtime_error("unknown method '" + method + "' (use oracle|construct)");
  }
  std::cout << "group " << rep.group_label << ", class " << rep.class_text << ", method "
            << (rep.method == InjectorMethod::Oracle ? "oracle" : "construct") << "\n";
  std::cout << "injectors " << rep.injectors.size() << ", conjugacy classes "
            << rep.conjugacy_class_count << "\n";
  for (std::size_t i = 0; i < rep.injectors.size(); ++i) {
    std::cout << "  " << describe_subgroup(rep.injectors[i]);
    if (rep.decomposition[i])
      std::cout << "  = (radical order " << rep.decomposition[i]->radical_part.order()
                << ") * (complement order " << rep.decomposition[i]->complement_part.order()
                << ")";
    std::cout << "\n";
  }
  if (rep.agreement)
    std::cout << "oracle agreement: " << (*rep.agreement ? "yes" : "NO") << "\n";
  else if (rep.method == InjectorMethod::Constructive)
    std::cout << "oracle agreement: unverified-by-oracle (above bound)\n";
  return 0;
}

int cmd_verify(const Session& s, const std::string& suite_id, const std::string& json_path) {
  std::vector<SuiteResult> results;
  if (suite_id == "all") {
    results = run_all(s.catalog, s.verify_cfg);
  } else {
    results.push_back(run_suite(suite_id, s.catalog, s.verify_cfg));
  }
  std::cout << report_text(results);
  if (!json_path.empty()) write_file(json_path, report_json_text(results, s.verify_cfg));
  return any_failures(results) ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fitting-class radicals, residuals and injectors on finite permutation groups"};
  app.require_subcommand(1);

  CliOptions opts;
  app.add_option("--config", opts.config_path, "flat key=value config file");
  app.add_option("--ingest-file", opts.flags.ingest,
                 "group file added to the session catalog (repeatable)");
  app.add_option("--element-bound", opts.flags.element_bound, "max elements for group closure");
  app.add_option("--subgroup-bound", opts.flags.subgroup_bound, "max order for lattice work");

  auto* groups = app.add_subcommand("groups", "catalog inspection");
  auto* groups_list = groups->add_subcommand("list", "list catalog groups");
  std::string show_label;
  auto* groups_show = groups->add_subcommand("show", "show one group");
  groups_show->add_option("label", show_label, "group label")->required();
  groups->require_subcommand(1);

  std::string ingest_path;
  auto* ingest = app.add_subcommand("ingest", "validate a group file");
  ingest->add_option("path", ingest_path, "group file path")->required();

  std::string rad_group, rad_class;
  auto* rad = app.add_subcommand("radical", "class radical of a catalog group");
  rad->add_option("--group", rad_group, "group label")->required();
  rad->add_option("--class", rad_class, "class expression")->required();

  std::string inj_group, inj_class, inj_method = "oracle";
  auto* inj = app.add_subcommand("injectors", "injectors of a catalog group");
  inj->add_option("--group", inj_group, "group label")->required();
  inj->add_option("--class", inj_class, "class expression")->required();
  inj->add_option("--method", inj_method, "oracle|construct");

  std::string suite_id = "all", json_path;
  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--suite", suite_id, "suite id or 'all'");
  verify->add_option("--json", json_path, "write the JSON report here");
  verify->add_option("--pi", opts.flags.pi, "prime set, e.g. {2,3} or ~{2} (repeatable)");
  verify->add_option("--x", opts.flags.x, "class expression for X (repeatable)");
  verify->add_option("--max-order", opts.flags.max_order, "skip groups above this order");

  CLI11_PARSE(app, argc, argv);

  try {
    Session session = build_session(opts);
    if (groups_list->parsed()) return cmd_groups_list(session);
    if (groups_show->parsed()) return cmd_groups_show(session, show_label);
    if (ingest->parsed()) return cmd_ingest(session, ingest_path);
    if (rad->parsed()) return cmd_radical(session, rad_group, rad_class);
    if (inj->parsed()) return cmd_injectors(session, inj_group, inj_class, inj_method);
    if (verify->parsed()) return cmd_verify(session, suite_id, json_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
