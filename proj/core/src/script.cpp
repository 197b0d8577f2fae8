#include "mcpr/script.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace mcpr {

std::string_view to_string(Family family) {
  switch (family) {
    case Family::kBinary:
      return "binary";
    case Family::kDary:
      return "dary";
    case Family::kCustom:
      return "custom";
  }
  return "custom";
}

Family parse_family(std::string_view name) {
  if (name == "binary") return Family::kBinary;
  if (name == "dary") return Family::kDary;
  if (name == "custom") return Family::kCustom;
  throw std::invalid_argument("unknown family '" + std::string(name) + "'");
}

int ArrivalScript::row_count() const noexcept {
  int rows = 0;
  for (const auto& e : edges) rows = std::max(rows, e.row + 1);
  return rows;
}

DynGraph build_graph(const ArrivalScript& script) {
  DynGraph g(script.n);
  for (const auto& e : script.edges) g.add_edge(e.u, e.v);
  return g;
}

void write_script(std::ostream& os, const ArrivalScript& script) {
  os << "# family=" << to_string(script.family) << " d=" << script.d
     << " N=" << script.N << " n=" << script.n << " top=" << script.top_row
     << '\n';
  for (const auto& e : script.edges) {
    os << e.u << ' ' << e.v << ' ' << e.row << '\n';
  }
}

void write_edge_list(std::ostream& os, const ArrivalScript& script) {
  for (const auto& e : script.edges) os << e.u << ' ' << e.v << '\n';
}

namespace {

void parse_header(const std::string& line, ArrivalScript& script) {
  std::istringstream in(line.substr(1));
  std::string field;
  while (in >> field) {
    const auto eq = field.find('=');
    if (eq == std::string::npos) continue;
    const std::string key = field.substr(0, eq);
    const std::string value = field.substr(eq + 1);
    if (key == "family") {
      script.family = parse_family(value);
    } else if (key == "d") {
      script.d = static_cast<std::uint32_t>(std::stoul(value));
    } else if (key == "N") {
      script.N = static_cast<std::uint32_t>(std::stoul(value));
    } else if (key == "n") {
      script.n = std::stoull(value);
    } else if (key == "top") {
      script.top_row = std::stoull(value);
    }
  }
}

}  // namespace

ArrivalScript read_script(std::istream& is, std::size_t min_nodes) {
  ArrivalScript script;
  std::string line;
  std::size_t line_no = 0;
  std::size_t max_id_plus_one = 0;
  while (std::getline(is, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') {
      parse_header(line.substr(first), script);
      continue;
    }
    std::istringstream in(line);
    long long u = -1;
    long long v = -1;
    if (!(in >> u >> v) || u < 0 || v < 0) {
      throw std::invalid_argument("malformed edge on line " +
                                  std::to_string(line_no));
    }
    int row = kTopRowLabel;
    if (!(in >> row)) row = kTopRowLabel;
    script.edges.push_back(
        {static_cast<NodeId>(u), static_cast<NodeId>(v), row});
    max_id_plus_one = std::max<std::size_t>(
        max_id_plus_one, static_cast<std::size_t>(std::max(u, v)) + 1);
  }
  script.n = std::max({script.n, max_id_plus_one, min_nodes, std::size_t{1}});
  return script;
}

}  // namespace mcpr
