#include "mcpr/graph.hpp"

#include <algorithm>

namespace mcpr {

DynGraph::DynGraph(std::size_t node_count) : out_adj_(node_count) {
  if (node_count == 0) {
    throw GraphError(GraphErrc::kEmptyGraph, "graph needs at least one node");
  }
}

void DynGraph::check_node(NodeId u) const {
  if (u >= out_adj_.size()) {
    throw GraphError(GraphErrc::kNodeOutOfRange,
                     "node " + std::to_string(u) + " out of range [0, " +
                         std::to_string(out_adj_.size()) + ")");
  }
}

std::size_t DynGraph::add_edge(NodeId u, NodeId v) {
  check_node(u);
  check_node(v);
  if (u == v) {
    throw GraphError(GraphErrc::kSelfLoop,
                     "self-loop at node " + std::to_string(u));
  }
  if (has_edge(u, v)) {
    throw GraphError(GraphErrc::kDuplicateEdge,
                     "duplicate edge " + std::to_string(u) + " -> " +
                         std::to_string(v));
  }
  out_adj_[u].push_back(v);
  ++edge_count_;
  return out_adj_[u].size();
}

std::size_t DynGraph::outdegree(NodeId u) const {
  check_node(u);
  return out_adj_[u].size();
}

NodeId DynGraph::out_neighbor(NodeId u, std::size_t k) const {
  check_node(u);
  if (k >= out_adj_[u].size()) {
    throw GraphError(GraphErrc::kNeighborOutOfRange,
                     "neighbor index " + std::to_string(k) +
                         " out of range for node " + std::to_string(u));
  }
  return out_adj_[u][k];
}

bool DynGraph::has_edge(NodeId u, NodeId v) const {
  check_node(u);
  const auto& adj = out_adj_[u];
  return std::find(adj.begin(), adj.end(), v) != adj.end();
}

std::span<const NodeId> DynGraph::out_neighbors(NodeId u) const {
  check_node(u);
  return out_adj_[u];
}

}  // namespace mcpr
