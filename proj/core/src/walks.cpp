#include "mcpr/walks.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <string>

namespace mcpr {

namespace {

void check_epsilon(double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw std::invalid_argument("epsilon must lie in (0, 1), got " +
                                std::to_string(epsilon));
  }
}

inline NodeId next_node(const DynGraph& g, NodeId current, NodeId source,
                        RngStream& rng) {
  const std::size_t d = g.outdegree_unchecked(current);
  if (d == 0) return source;
  if (d == 1) return g.out_neighbor_unchecked(current, 0);
  return g.out_neighbor_unchecked(current, rng.uniform_index(d));
}

}  // namespace

std::uint32_t sample_budget(double epsilon, RngStream& rng) {
  check_epsilon(epsilon);
  return std::geometric_distribution<std::uint32_t>(epsilon)(rng.engine());
}

Walk generate_walk(const DynGraph& g, NodeId source, std::uint32_t budget,
                   RngStream& rng) {
  if (source >= g.node_count()) {
    throw GraphError(GraphErrc::kNodeOutOfRange,
                     "walk source " + std::to_string(source) + " out of range");
  }
  Walk walk{.id = 0, .source = source, .budget = budget, .steps = {}};
  walk.steps.reserve(budget + std::size_t{1});
  walk.steps.push_back(source);
  for (std::uint32_t i = 0; i < budget; ++i) {
    walk.steps.push_back(next_node(g, walk.steps.back(), source, rng));
  }
  return walk;
}

WalkStore::WalkStore(const DynGraph& g, std::uint32_t walks_per_node,
                     double epsilon, RngStream& rng)
    : walks_per_node_(walks_per_node),
      epsilon_(epsilon),
      index_(g.node_count()) {
  if (walks_per_node == 0) {
    throw std::invalid_argument("need at least one walk per node");
  }
  check_epsilon(epsilon);
  budget_.resize(g.node_count() * walks_per_node);
  for (auto& b : budget_) b = sample_budget(epsilon, rng);
  build(g, rng);
}

WalkStore::WalkStore(const DynGraph& g, std::uint32_t walks_per_node,
                     double epsilon, std::span<const std::uint32_t> budgets,
                     RngStream& rng)
    : walks_per_node_(walks_per_node),
      epsilon_(epsilon),
      budget_(budgets.begin(), budgets.end()),
      index_(g.node_count()) {
  if (walks_per_node == 0) {
    throw std::invalid_argument("need at least one walk per node");
  }
  check_epsilon(epsilon);
  if (budgets.size() != g.node_count() * walks_per_node) {
    throw std::invalid_argument("need one budget per walk");
  }
  build(g, rng);
}

void WalkStore::build(const DynGraph& g, RngStream& rng) {
  const std::size_t walks = budget_.size();
  offset_.resize(walks);
  visit_stamp_.assign(walks, 0);
  std::size_t total = 0;
  for (std::size_t w = 0; w < walks; ++w) {
    offset_[w] = total;
    total += budget_[w] + std::size_t{1};
  }
  nodes_.resize(total);
  slots_.resize(total);

  for (WalkId w = 0; w < walks; ++w) {
    nodes_[offset_[w]] = source(w);
    resample_from(g, w, 0, rng);
  }
}

Walk WalkStore::walk(WalkId w) const {
  const auto s = steps(w);
  return Walk{.id = w,
              .source = source(w),
              .budget = budget_[w],
              .steps = std::vector<NodeId>(s.begin(), s.end())};
}

void WalkStore::link(WalkId w, std::uint32_t position, NodeId node) {
  auto& list = index_[node];
  slots_[offset_[w] + position] = static_cast<std::uint32_t>(list.size());
  list.push_back({w, position});
}

void WalkStore::unlink(WalkId w, std::uint32_t position) {
  const std::size_t at = offset_[w] + position;
  auto& list = index_[nodes_[at]];
  const std::uint32_t slot = slots_[at];
  const Occurrence last = list.back();
  list[slot] = last;
  slots_[offset_[last.walk] + last.position] = slot;
  list.pop_back();
}

void WalkStore::resample_from(const DynGraph& g, WalkId w,
                              std::uint32_t position, RngStream& rng) {
  const std::size_t off = offset_[w];
  const std::uint32_t budget = budget_[w];
  const NodeId src = source(w);
  for (std::uint32_t p = position; p < budget; ++p) {
    link(w, p, nodes_[off + p]);
    nodes_[off + p + 1] = next_node(g, nodes_[off + p], src, rng);
  }
}

UpdateStats WalkStore::on_edge_arrival(const DynGraph& g, NodeId u, NodeId v,
                                       RngStream& rng,
                                       std::vector<WalkId>* rerouted) {
  if (g.node_count() != index_.size()) {
    throw std::invalid_argument("graph does not match walk store");
  }
  if (!g.has_edge(u, v)) {
    throw std::invalid_argument("edge " + std::to_string(u) + " -> " +
                                std::to_string(v) +
                                " must be inserted before maintenance");
  }
  UpdateStats stats;
  const auto& list = index_[u];
  if (list.empty()) return stats;
  const std::size_t d = g.outdegree_unchecked(u);

  if (++stamp_ == 0) {
    std::fill(visit_stamp_.begin(), visit_stamp_.end(), 0);
    stamp_ = 1;
  }
  scratch_.clear();
  for (const Occurrence& occ : list) {
    if (visit_stamp_[occ.walk] != stamp_) {
      visit_stamp_[occ.walk] = stamp_;
      scratch_.push_back(occ.walk);
    }
  }

  for (const WalkId w : scratch_) {
    const std::size_t off = offset_[w];
    const std::uint32_t budget = budget_[w];
    for (std::uint32_t p = 0; p < budget; ++p) {
      if (nodes_[off + p] != u) continue;
      ++stats.coin_flips;
      const bool take_new_edge = d == 1 || rng.uniform_index(d) == 0;
      if (!take_new_edge) continue;

      for (std::uint32_t q = p + 1; q < budget; ++q) unlink(w, q);
      nodes_[off + p + 1] = v;
      resample_from(g, w, p + 1, rng);
      ++stats.reroute_events;
      stats.steps_regenerated += budget - p;
      if (rerouted != nullptr) rerouted->push_back(w);
      break;
    }
  }
  return stats;
}

std::vector<std::uint64_t> WalkStore::visit_counts() const {
  std::vector<std::uint64_t> counts(index_.size(), 0);
  for (const NodeId node : nodes_) ++counts[node];
  return counts;
}

bool WalkStore::index_consistent() const {
  std::vector<std::vector<Occurrence>> rebuilt(index_.size());
  for (WalkId w = 0; w < walk_count(); ++w) {
    const std::size_t off = offset_[w];
    for (std::uint32_t p = 0; p < budget_[w]; ++p) {
      rebuilt[nodes_[off + p]].push_back({w, p});
    }
  }
  for (std::size_t u = 0; u < index_.size(); ++u) {
    auto current = index_[u];
    if (current.size() != rebuilt[u].size()) return false;
    for (std::size_t slot = 0; slot < current.size(); ++slot) {
      const Occurrence occ = current[slot];
      if (occ.walk >= walk_count() || occ.position >= budget_[occ.walk]) {
        return false;
      }
      if (slots_[offset_[occ.walk] + occ.position] != slot) return false;
    }
    std::sort(current.begin(), current.end());
    if (current != rebuilt[u]) return false;
  }
  return true;
}

void WalkStore::dump(std::ostream& os) const {
  for (WalkId w = 0; w < walk_count(); ++w) {
    os << w << ' ' << source(w) << ' ' << budget_[w] << ':';
    for (const NodeId node : steps(w)) os << ' ' << node;
    os << '\n';
  }
}

}  // namespace mcpr
