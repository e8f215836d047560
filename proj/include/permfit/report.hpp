#pragma once

#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "permfit/suites.hpp"

namespace permfit {

inline constexpr const char* kVersion = "0.1.0";

/// Machine-readable report:
///   {version, config_echo, suites:[{id, groups:[{label, status, details,
///    injector_orders, class_count}]}]}
/// Byte-stable for a fixed config: no timestamps, no wall times, insertion
/// order everywhere.
inline nlohmann::ordered_json report_json(const std::vector<SuiteResult>& results,
                                          const VerifyConfig& cfg) {
  nlohmann::ordered_json root;
  root["version"] = kVersion;

  nlohmann::ordered_json echo;
  {
    nlohmann::ordered_json pis = nlohmann::ordered_json::array();
    for (const auto& pi : cfg.pi_list) pis.push_back(pi.to_string());
    echo["pi"] = std::move(pis);
    nlohmann::ordered_json xs = nlohmann::ordered_json::array();
    for (const auto& x : cfg.x_list) xs.push_back(x.to_string());
    echo["x"] = std::move(xs);
    echo["p"] = cfg.p_list;
    echo["k"] = cfg.k_list;
    echo["max_order"] = cfg.max_order;
    echo["subgroup_bound"] = cfg.subgroup_bound;
  }
  root["config_echo"] = std::move(echo);

  nlohmann::ordered_json suites = nlohmann::ordered_json::array();
  for (const auto& suite : results) {
    nlohmann::ordered_json s;
    s["id"] = suite.id;
    nlohmann::ordered_json groups = nlohmann::ordered_json::array();
    for (const auto& rec : suite.records) {
      nlohmann::ordered_json g;
      g["label"] = rec.label;
      g["status"] = to_string(rec.status);
      g["details"] = rec.details;
      g["injector_orders"] = rec.injector_orders;
      if (rec.class_count)
        g["class_count"] = *rec.class_count;
      else
        g["class_count"] = nullptr;
      groups.push_back(std::move(g));
    }
    s["groups"] = std::move(groups);
    suites.push_back(std::move(s));
  }
  root["suites"] = std::move(suites);
  return root;
}

inline std::string report_json_text(const std::vector<SuiteResult>& results,
                                    const VerifyConfig& cfg) {
  return report_json(results, cfg).dump(2) + "\n";
}

/// Human-readable report; includes wall times, so not byte-stable.
inline std::string report_text(const std::vector<SuiteResult>& results) {
  std::string out;
  std::size_t total_failed = 0;
  for (const auto& suite : results) {
    out += "suite " + suite.id + ": " + std::to_string(suite.passed) + " pass, " +
           std::to_string(suite.failed) + " fail, " + std::to_string(suite.skipped) +
           " skipped (" + std::to_string(suite.wall_seconds) + "s)\n";
    for (const auto& rec : suite.records) {
      out += "  [" + std::string(to_string(rec.status)) + "] " + rec.label;
      if (!rec.details.empty()) out += " -- " + rec.details;
      out += "\n";
    }
    total_failed += suite.failed;
  }
  out += total_failed ? "FAILURES: " + std::to_string(total_failed) + "\n"
                      : "all suites clean\n";
  return out;
}

inline void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write report to " + path);
  out << contents;
  if (!out.good()) throw std::runtime_error("short write to " + path);
}

inline bool any_failures(const std::vector<SuiteResult>& results) {
  for (const auto& suite : results)
    if (suite.failed) return true;
  return false;
}

}  // namespace permfit
