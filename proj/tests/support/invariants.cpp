#include "invariants.hpp"

#include <algorithm>
#include <numeric>

#include "mcpr/experiment.hpp"

namespace mcpr::testing {

namespace {

std::string where(std::size_t arrival, WalkId w) {
  return "arrival " + std::to_string(arrival) + ", walk " + std::to_string(w);
}

}  // namespace

InvariantReport check_replay_invariants(const ArrivalScript& script,
                                        std::uint32_t walks_per_node,
                                        double epsilon, std::uint64_t seed) {
  InvariantReport report;
  const auto fail = [&](std::string what) {
    if (report.violations.size() < 20) report.violations.push_back(std::move(what));
  };

  RngStream rng(seed);
  DynGraph g(script.n);
  WalkStore store(g, walks_per_node, epsilon, rng);

  std::vector<std::uint32_t> budgets(store.walk_count());
  std::vector<std::vector<NodeId>> before(store.walk_count());
  for (WalkId w = 0; w < store.walk_count(); ++w) {
    budgets[w] = store.budget(w);
  }
  if (!store.index_consistent()) fail("index inconsistent after init");

  std::vector<WalkId> rerouted;
  for (std::size_t a = 0; a < script.edges.size(); ++a) {
    const auto [u, v, row] = script.edges[a];
    for (WalkId w = 0; w < store.walk_count(); ++w) {
      const auto s = store.steps(w);
      before[w].assign(s.begin(), s.end());
    }
    const std::size_t d = g.add_edge(u, v);
    if (d != g.outdegree(u)) fail("add_edge return differs from outdegree");

    rerouted.clear();
    const UpdateStats delta = store.on_edge_arrival(g, u, v, rng, &rerouted);
    ++report.arrivals_checked;

    if (delta.reroute_events != rerouted.size()) {
      fail("reroute count differs from rerouted walk list at arrival " +
           std::to_string(a));
    }
    if (delta.reroute_events > delta.coin_flips) {
      fail("more reroutes than coin flips at arrival " + std::to_string(a));
    }
    if (delta.steps_regenerated < delta.reroute_events) {
      fail("fewer regenerated steps than reroutes at arrival " +
           std::to_string(a));
    }
    if (!store.index_consistent()) {
      fail("index inconsistent at arrival " + std::to_string(a));
    }

    std::vector<char> was_rerouted(store.walk_count(), 0);
    for (const WalkId w : rerouted) was_rerouted[w] = 1;

    std::uint64_t regenerated = 0;
    for (WalkId w = 0; w < store.walk_count(); ++w) {
      const auto steps = store.steps(w);
      const NodeId src = store.source(w);
      if (store.budget(w) != budgets[w] ||
          steps.size() != budgets[w] + std::size_t{1}) {
        fail("length changed: " + where(a, w));
        continue;
      }
      if (steps.front() != src) fail("first step is not the source: " + where(a, w));

      std::size_t fresh_from = steps.size();
      if (was_rerouted[w]) {
        // With d == 1 the first visit to u always wins. Otherwise the old
        // walk left u along an older edge, so the first changed step is the
        // one right after the reroute.
        std::size_t p = 0;
        if (d == 1) {
          while (p < budgets[w] && steps[p] != u) ++p;
        } else {
          while (p < steps.size() && steps[p] == before[w][p]) ++p;
          p = p == 0 ? steps.size() : p - 1;
        }
        if (p >= budgets[w] || steps[p] != u) {
          fail("rerouted walk has no reroute point at u: " + where(a, w));
          continue;
        }
        if (steps[p + 1] != v) fail("rerouted walk does not take (u,v): " + where(a, w));
        for (std::size_t q = 0; q < p; ++q) {
          if (steps[q] != before[w][q]) fail("prefix changed: " + where(a, w));
        }
        regenerated += budgets[w] - p;
        fresh_from = p;
      } else if (!std::equal(steps.begin(), steps.end(), before[w].begin())) {
        fail("walk changed without a reroute: " + where(a, w));
      }

      for (std::size_t p = 0; p + 1 < steps.size(); ++p) {
        const NodeId from = steps[p];
        const NodeId to = steps[p + 1];
        if (g.has_edge(from, to)) continue;
        if (to != src) {
          fail("transition is neither an edge nor a reset: " + where(a, w));
        } else if (p >= fresh_from && g.outdegree(from) != 0) {
          fail("fresh reset from a non-dangling node: " + where(a, w));
        }
      }
    }
    if (regenerated != delta.steps_regenerated) {
      fail("regenerated step count mismatch at arrival " + std::to_string(a));
    }
  }

  const auto counts = store.visit_counts();
  const std::uint64_t visits =
      std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
  std::uint64_t expected = 0;
  for (const auto b : budgets) expected += b + std::uint64_t{1};
  if (visits != expected) fail("visit count conservation broken");

  const RunRecord record = replay(
      script, {.walks_per_node = walks_per_node, .epsilon = epsilon, .seed = seed});
  const std::uint64_t by_row = std::accumulate(
      record.row_counts.begin(), record.row_counts.end(), record.top_edge_reroutes);
  if (by_row != record.reroutes_total) fail("row counters do not sum to total");
  return report;
}

}  // namespace mcpr::testing
