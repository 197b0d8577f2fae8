#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "mcpr/graph.hpp"
#include "mcpr/rng.hpp"

namespace mcpr {

using WalkId = std::uint32_t;

/// Number of transitions drawn as P(L = k) = eps * (1 - eps)^k, k >= 0.
///
/// The survival function is P(L >= i) = (1 - eps)^i, so the mean is
/// (1 - eps) / eps rather than 1 / eps.
std::uint32_t sample_budget(double epsilon, RngStream& rng);

/// A stored walk. steps.size() == budget + 1 and steps.front() == source.
struct Walk {
  WalkId id = 0;
  NodeId source = 0;
  std::uint32_t budget = 0;
  std::vector<NodeId> steps;

  friend bool operator==(const Walk&, const Walk&) = default;
};

/// Takes `budget` transitions from `source`. A dangling node (outdegree 0)
/// jumps back to the source, and that jump uses up one transition.
Walk generate_walk(const DynGraph& g, NodeId source, std::uint32_t budget,
                   RngStream& rng);

struct UpdateStats {
  std::uint64_t reroute_events = 0;
  std::uint64_t steps_regenerated = 0;
  std::uint64_t coin_flips = 0;

  UpdateStats& operator+=(const UpdateStats& o) {
    reroute_events += o.reroute_events;
    steps_regenerated += o.steps_regenerated;
    coin_flips += o.coin_flips;
    return *this;
  }
  friend bool operator==(const UpdateStats&, const UpdateStats&) = default;
};

/// One indexed visit: walk `walk` sits at this node at step `position`,
/// with position < budget.
struct Occurrence {
  WalkId walk;
  std::uint32_t position;

  friend auto operator<=>(const Occurrence&, const Occurrence&) = default;
};

/// R walks per node plus the inverted index node -> occurrences.
///
/// Walk w has source w / R. Steps live in one flat buffer; every indexed
/// step also records its slot in the owning node's occurrence list so a
/// reroute can unlink a suffix in O(length).
class WalkStore {
 public:
  WalkStore(const DynGraph& g, std::uint32_t walks_per_node, double epsilon,
            RngStream& rng);

  /// Same, with budgets given instead of sampled; budgets[w] is the budget
  /// of walk w and budgets.size() must be n * walks_per_node.
  WalkStore(const DynGraph& g, std::uint32_t walks_per_node, double epsilon,
            std::span<const std::uint32_t> budgets, RngStream& rng);

  std::size_t node_count() const noexcept { return index_.size(); }
  std::size_t walk_count() const noexcept { return budget_.size(); }
  std::uint32_t walks_per_node() const noexcept { return walks_per_node_; }
  double epsilon() const noexcept { return epsilon_; }

  NodeId source(WalkId w) const noexcept {
    return static_cast<NodeId>(w / walks_per_node_);
  }
  std::uint32_t budget(WalkId w) const noexcept { return budget_[w]; }
  std::span<const NodeId> steps(WalkId w) const noexcept {
    return {nodes_.data() + offset_[w], budget_[w] + std::size_t{1}};
  }
  Walk walk(WalkId w) const;

  std::span<const Occurrence> occurrences(NodeId u) const noexcept {
    return index_[u];
  }

  /// Maintains the walks after (u, v) has been inserted into g.
  ///
  /// Each walk with an indexed visit to u gets one Bernoulli(1 / d(u)) coin
  /// per visit, in position order. On the first success at position p the
  /// walk continues p -> v and the remaining budget - p - 1 transitions are
  /// resampled on the current graph. If `rerouted` is non-null the ids of
  /// rerouted walks are appended to it.
  UpdateStats on_edge_arrival(const DynGraph& g, NodeId u, NodeId v,
                              RngStream& rng,
                              std::vector<WalkId>* rerouted = nullptr);

  /// counts[v] = number of steps (terminal ones included) sitting at v.
  std::vector<std::uint64_t> visit_counts() const;

  /// True iff the occurrence index matches one rebuilt from walk contents.
  bool index_consistent() const;

  /// One line per walk: "walk_id source budget: v0 v1 ... vL".
  void dump(std::ostream& os) const;

 private:
  void build(const DynGraph& g, RngStream& rng);
  void link(WalkId w, std::uint32_t position, NodeId node);
  void unlink(WalkId w, std::uint32_t position);
  void resample_from(const DynGraph& g, WalkId w, std::uint32_t position,
                     RngStream& rng);

  std::uint32_t walks_per_node_;
  double epsilon_;
  std::vector<std::uint32_t> budget_;
  std::vector<std::size_t> offset_;
  std::vector<NodeId> nodes_;          // flat step buffer
  std::vector<std::uint32_t> slots_;   // slot of each indexed step in index_
  std::vector<std::vector<Occurrence>> index_;
  std::vector<std::uint32_t> visit_stamp_;
  std::uint32_t stamp_ = 0;
  std::vector<WalkId> scratch_;
};

}  // namespace mcpr
