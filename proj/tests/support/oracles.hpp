#pragma once

// Test-only reference computations. Nothing here calls into the walk
// engine; they enumerate or sum the walk process directly.

#include <cmath>
#include <cstdint>
#include <map>
#include <vector>

#include "mcpr/graph.hpp"
#include "mcpr/rng.hpp"
#include "mcpr/script.hpp"

namespace mcpr::testing {

using Sequence = std::vector<NodeId>;

/// Exact distribution of the node sequence of a fresh walk with a fixed
/// budget, by enumerating every path of the transition rule.
std::map<Sequence, double> enumerate_walks(const DynGraph& g, NodeId source,
                                           std::uint32_t budget);

/// Expected visits by brute-force path enumeration up to `max_len` steps,
/// weighting step t by (1 - eps)^t. Independent of the occupancy DP.
std::vector<double> enumerate_expected_visits(const DynGraph& g, double epsilon,
                                              NodeId source,
                                              std::uint32_t max_len);

/// Random simple digraph on n nodes where each node draws an outdegree in
/// [0, max_out] and distinct non-self targets. Edges come out shuffled.
ArrivalScript random_script(std::size_t n, std::size_t max_out, RngStream& rng);

/// Random simple digraph where each ordered pair is present with
/// probability p, in random arrival order.
ArrivalScript random_dense_script(std::size_t n, double p, RngStream& rng);

/// Total variation between two sparse distributions.
template <class Key>
double total_variation(const std::map<Key, double>& a,
                       const std::map<Key, double>& b) {
  double sum = 0.0;
  for (const auto& [k, pa] : a) {
    const auto it = b.find(k);
    sum += std::abs(pa - (it == b.end() ? 0.0 : it->second));
  }
  for (const auto& [k, pb] : b) {
    if (!a.contains(k)) sum += std::abs(pb);
  }
  return 0.5 * sum;
}

}  // namespace mcpr::testing
