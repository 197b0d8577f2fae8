#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace mcpr {

using NodeId = std::uint32_t;

enum class GraphErrc {
  kEmptyGraph,
  kNodeOutOfRange,
  kSelfLoop,
  kDuplicateEdge,
  kNeighborOutOfRange,
};

class GraphError : public std::invalid_argument {
 public:
  GraphError(GraphErrc code, const std::string& what)
      : std::invalid_argument(what), code_(code) {}

  GraphErrc code() const noexcept { return code_; }

 private:
  GraphErrc code_;
};

/// Insertion-only directed graph over a fixed node set [0, n).
///
/// Out-adjacency lists keep arrival order, so the k-th neighbor of u is the
/// k-th edge that arrived at u. Self-loops and parallel edges are rejected.
class DynGraph {
 public:
  explicit DynGraph(std::size_t node_count);

  std::size_t node_count() const noexcept { return out_adj_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  /// Appends v to u's out-list and returns u's new outdegree.
  std::size_t add_edge(NodeId u, NodeId v);

  std::size_t outdegree(NodeId u) const;
  NodeId out_neighbor(NodeId u, std::size_t k) const;
  bool has_edge(NodeId u, NodeId v) const;

  std::span<const NodeId> out_neighbors(NodeId u) const;

  // Unchecked accessors for hot loops; callers guarantee u < node_count().
  std::size_t outdegree_unchecked(NodeId u) const noexcept {
    return out_adj_[u].size();
  }
  NodeId out_neighbor_unchecked(NodeId u, std::size_t k) const noexcept {
    return out_adj_[u][k];
  }

  friend bool operator==(const DynGraph&, const DynGraph&) = default;

 private:
  void check_node(NodeId u) const;

  std::vector<std::vector<NodeId>> out_adj_;
  std::size_t edge_count_ = 0;
};

}  // namespace mcpr
