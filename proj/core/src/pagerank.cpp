#include "mcpr/pagerank.hpp"

#include <cmath>
#include <iomanip>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace mcpr {

ScoreVector estimate(const WalkStore& store) {
  const auto counts = store.visit_counts();
  const double total = static_cast<double>(
      std::accumulate(counts.begin(), counts.end(), std::uint64_t{0}));
  ScoreVector scores(counts.size());
  for (std::size_t v = 0; v < counts.size(); ++v) {
    scores[v] = static_cast<double>(counts[v]) / total;
  }
  return scores;
}

ScoreVector expected_visits(const DynGraph& g, double epsilon, NodeId source,
                            double tail_tol) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw std::invalid_argument("epsilon must lie in (0, 1)");
  }
  if (!(tail_tol > 0.0)) {
    throw std::invalid_argument("tail tolerance must be positive");
  }
  const std::size_t n = g.node_count();
  if (source >= n) {
    throw GraphError(GraphErrc::kNodeOutOfRange, "source out of range");
  }

  ScoreVector counts(n, 0.0);
  std::vector<double> occupancy(n, 0.0);
  std::vector<double> next(n, 0.0);
  occupancy[source] = 1.0;
  for (double survive = 1.0; survive >= tail_tol; survive *= 1.0 - epsilon) {
    for (std::size_t v = 0; v < n; ++v) counts[v] += survive * occupancy[v];
    std::fill(next.begin(), next.end(), 0.0);
    for (NodeId u = 0; u < n; ++u) {
      const double mass = occupancy[u];
      if (mass == 0.0) continue;
      const auto out = g.out_neighbors(u);
      if (out.empty()) {
        next[source] += mass;
        continue;
      }
      const double share = mass / static_cast<double>(out.size());
      for (const NodeId w : out) next[w] += share;
    }
    occupancy.swap(next);
  }
  return counts;
}

ScoreVector expected_scores(const DynGraph& g, double epsilon,
                            double tail_tol) {
  ScoreVector total(g.node_count(), 0.0);
  for (NodeId s = 0; s < g.node_count(); ++s) {
    const auto counts = expected_visits(g, epsilon, s, tail_tol);
    for (std::size_t v = 0; v < total.size(); ++v) total[v] += counts[v];
  }
  const double sum = std::accumulate(total.begin(), total.end(), 0.0);
  for (double& x : total) x /= sum;
  return total;
}

double total_variation(const ScoreVector& a, const ScoreVector& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("score vectors differ in length");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += std::abs(a[i] - b[i]);
  return 0.5 * sum;
}

void write_scores_csv(std::ostream& os, const ScoreVector& scores) {
  os << "node,score\n" << std::setprecision(17);
  for (std::size_t v = 0; v < scores.size(); ++v) {
    os << v << ',' << scores[v] << '\n';
  }
}

}  // namespace mcpr
