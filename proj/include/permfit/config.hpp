#pragma once

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "permfit/class_parse.hpp"
#include "permfit/suites.hpp"

namespace permfit {

/// Flat key=value configuration. '#' starts a comment; blank lines are
/// ignored. Multi-valued keys (pi, x, ingest) take ';'-separated lists.
inline std::map<std::string, std::string> read_config(std::istream& in) {
  std::map<std::string, std::string> kv;
  std::string line;
  std::size_t line_no = 0;
  auto trim = [](std::string s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    std::size_t e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    if (trim(line).empty()) continue;
    std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw ParseError("config line " + std::to_string(line_no) + ": expected key=value",
                       line_no);
    std::string key = trim(line.substr(0, eq));
    if (key.empty())
      throw ParseError("config line " + std::to_string(line_no) + ": empty key", line_no);
    kv[key] = trim(line.substr(eq + 1));
  }
  return kv;
}

inline std::map<std::string, std::string> read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  return read_config(in);
}

inline std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ';')) {
    std::size_t b = part.find_first_not_of(" \t");
    std::size_t e = part.find_last_not_of(" \t");
    if (b != std::string::npos) out.push_back(part.substr(b, e - b + 1));
  }
  return out;
}

/// Values supplied on the command line; empty vectors / zeros mean "not set".
struct ConfigOverrides {
  std::vector<std::string> pi;
  std::vector<std::string> x;
  std::vector<std::string> ingest;
  std::uint64_t max_order = 0;
  std::size_t element_bound = 0;
  std::size_t subgroup_bound = 0;
};

struct SessionConfig {
  VerifyConfig verify = VerifyConfig::defaults();
  std::size_t element_bound = PermGroup::kDefaultElementBound;
  std::vector<std::string> ingest_paths;
};

/// Merge a config file with command-line values; flags win key by key.
inline SessionConfig build_session_config(const std::map<std::string, std::string>& file_kv,
                                          const ConfigOverrides& flags) {
  SessionConfig s;

  std::vector<std::string> pi_texts = flags.pi;
  if (pi_texts.empty() && file_kv.count("pi")) pi_texts = split_list(file_kv.at("pi"));
  if (!pi_texts.empty()) {
    s.verify.pi_list.clear();
    for (const auto& t : pi_texts) s.verify.pi_list.push_back(parse_prime_set(t));
  }

  std::vector<std::string> x_texts = flags.x;
  if (x_texts.empty() && file_kv.count("x")) x_texts = split_list(file_kv.at("x"));
  if (!x_texts.empty()) {
    s.verify.x_list.clear();
    for (const auto& t : x_texts) s.verify.x_list.push_back(parse_class_expr(t));
  }

  if (flags.max_order)
    s.verify.max_order = flags.max_order;
  else if (file_kv.count("max_order"))
    s.verify.max_order = std::stoull(file_kv.at("max_order"));

  if (flags.subgroup_bound)
    s.verify.subgroup_bound = flags.subgroup_bound;
  else if (file_kv.count("subgroup_bound"))
    s.verify.subgroup_bound = std::stoull(file_kv.at("subgroup_bound"));

  if (flags.element_bound)
    s.element_bound = flags.element_bound;
  else if (file_kv.count("element_bound"))
    s.element_bound = std::stoull(file_kv.at("element_bound"));

  if (file_kv.count("ingest")) s.ingest_paths = split_list(file_kv.at("ingest"));
  for (const auto& p : flags.ingest) s.ingest_paths.push_back(p);
  return s;
}

}  // namespace permfit
