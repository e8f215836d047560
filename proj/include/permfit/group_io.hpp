#pragma once

#include <cctype>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "permfit/perm_group.hpp"

namespace permfit {

/// Group file format, one item per line:
///
///   # comment
///   name S4            (optional)
///   degree 4
///   gen (1 2 3 4)      one line per generator, 1-based disjoint cycles
///   gen (1 2)
///
/// Blank lines and '#' comments are ignored. Parse errors cite the line.
namespace detail {

[[noreturn]] inline void io_fail(std::size_t line_no, const std::string& msg) {
  throw ParseError("line " + std::to_string(line_no) + ": " + msg, line_no);
}

inline std::vector<std::vector<unsigned>> parse_cycles(const std::string& text,
                                                       unsigned degree,
                                                       std::size_t line_no) {
  std::vector<std::vector<unsigned>> cycles;
  std::vector<bool> used(degree, false);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') io_fail(line_no, "expected '(' in cycle notation");
    ++i;
    std::vector<unsigned> cyc;
    for (;;) {
      skip_ws();
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
        io_fail(line_no, "expected a point or ')' in cycle");
      unsigned long v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + static_cast<unsigned long>(text[i] - '0');
        if (v > 1000000) io_fail(line_no, "point out of range");
        ++i;
      }
      if (v == 0 || v > degree)
        io_fail(line_no, "point " + std::to_string(v) + " outside 1.." +
                             std::to_string(degree));
      unsigned pt = static_cast<unsigned>(v - 1);
      if (used[pt])
        io_fail(line_no, "point " + std::to_string(v) + " repeated across cycles");
      used[pt] = true;
      cyc.push_back(pt);
    }
    if (cyc.empty()) io_fail(line_no, "empty cycle");
    cycles.push_back(std::move(cyc));
    skip_ws();
  }
  return cycles;
}

}  // namespace detail

inline GroupPtr read_group(std::istream& in, std::string fallback_label = "",
                           std::size_t element_bound = PermGroup::kDefaultElementBound) {
  std::string label = std::move(fallback_label);
  unsigned degree = 0;
  bool have_degree = false;
  std::vector<std::string> gen_lines;
  std::vector<std::size_t> gen_line_nos;

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream ls(line.substr(start));
    std::string keyword;
    ls >> keyword;
    if (keyword == "degree") {
      if (have_degree) detail::io_fail(line_no, "duplicate degree line");
      long d = -1;
      if (!(ls >> d) || d <= 0) detail::io_fail(line_no, "degree must be a positive integer");
      degree = static_cast<unsigned>(d);
      have_degree = true;
    } else if (keyword == "gen") {
      if (!have_degree) detail::io_fail(line_no, "gen before degree");
      std::string rest;
      std::getline(ls, rest);
      gen_lines.push_back(rest);
      gen_line_nos.push_back(line_no);
    } else if (keyword == "name") {
      std::string rest;
      std::getline(ls, rest);
      std::size_t b = rest.find_first_not_of(" \t");
      std::size_t e = rest.find_last_not_of(" \t\r");
      if (b == std::string::npos) detail::io_fail(line_no, "empty name");
      label = rest.substr(b, e - b + 1);
    } else {
      detail::io_fail(line_no, "unknown keyword '" + keyword + "'");
    }
  }
  if (!have_degree) detail::io_fail(line_no + 1, "missing degree line");

  std::vector<Permutation> gens;
  for (std::size_t i = 0; i < gen_lines.size(); ++i) {
    auto cycles = detail::parse_cycles(gen_lines[i], degree, gen_line_nos[i]);
    gens.push_back(Permutation::from_cycles(degree, cycles));
  }
  return PermGroup::from_generators(degree, std::move(gens), std::move(label), element_bound);
}

inline GroupPtr read_group_file(const std::string& path,
                                std::size_t element_bound = PermGroup::kDefaultElementBound) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open group file: " + path);
  std::string label = path;
  std::size_t slash = label.find_last_of('/');
  if (slash != std::string::npos) label = label.substr(slash + 1);
  std::size_t dot = label.find_last_of('.');
  if (dot != std::string::npos && dot > 0) label = label.substr(0, dot);
  return read_group(in, label, element_bound);
}

/// Render a group in the same file format (name, degree, generator cycles).
inline std::string to_group_file(const PermGroup& G) {
  std::string out;
  if (!G.label().empty()) out += "name " + G.label() + "\n";
  out += "degree " + std::to_string(G.degree()) + "\n";
  for (const auto& g : G.generators())
    if (!g.is_identity()) out += "gen " + g.to_cycle_string() + "\n";
  return out;
}

}  // namespace permfit
