#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "mcpr/graph.hpp"

namespace mcpr {

enum class Family { kBinary, kDary, kCustom };

std::string_view to_string(Family family);
Family parse_family(std::string_view name);

inline constexpr int kTopRowLabel = -1;

struct ScriptEdge {
  NodeId u;
  NodeId v;
  // Tree row of u for tree edges, kTopRowLabel for top-row edges.
  int row;

  friend auto operator<=>(const ScriptEdge&, const ScriptEdge&) = default;
};

/// An ordered edge arrival sequence over n nodes.
///
/// For the generated families nodes [0, top_row) are the top row; every
/// other node belongs to the tree.
struct ArrivalScript {
  Family family = Family::kCustom;
  std::uint32_t d = 0;
  std::uint32_t N = 0;
  std::size_t n = 0;
  std::size_t top_row = 0;
  std::vector<ScriptEdge> edges;

  std::size_t m() const noexcept { return edges.size(); }
  /// One past the largest row label, 0 when there are no tree edges.
  int row_count() const noexcept;
  bool is_top_row(NodeId node) const noexcept { return node < top_row; }
};

/// Builds the final graph of a script, rejecting duplicates and bad ids.
DynGraph build_graph(const ArrivalScript& script);

/// Script file: a "# family=... d=... N=... n=... top=..." header followed by
/// one "u v row" line per edge in arrival order.
void write_script(std::ostream& os, const ArrivalScript& script);

/// Plain edge list: one "u v" line per edge, 0-based, in arrival order.
void write_edge_list(std::ostream& os, const ArrivalScript& script);

/// Reads either format. Without a header, n defaults to max id + 1 (or
/// `min_nodes` if larger) and missing row labels become kTopRowLabel.
ArrivalScript read_script(std::istream& is, std::size_t min_nodes = 0);

}  // namespace mcpr
