#pragma once

#include <iosfwd>
#include <vector>

#include "mcpr/graph.hpp"
#include "mcpr/walks.hpp"

namespace mcpr {

using ScoreVector = std::vector<double>;

inline constexpr double kDefaultTailTolerance = 1e-12;

/// Visit-frequency estimate: visits(v) / total visits. Sums to 1.
ScoreVector estimate(const WalkStore& store);

/// Exact expected number of steps at each node for one walk from `source`
/// with a geometric budget, i.e. sum_t (1 - eps)^t * P(at node at step t).
/// The series is cut once (1 - eps)^t drops below tail_tol.
ScoreVector expected_visits(const DynGraph& g, double epsilon, NodeId source,
                            double tail_tol = kDefaultTailTolerance);

/// Average of expected_visits over all sources, normalized to sum 1. This is
/// what estimate() converges to.
ScoreVector expected_scores(const DynGraph& g, double epsilon,
                            double tail_tol = kDefaultTailTolerance);

double total_variation(const ScoreVector& a, const ScoreVector& b);

/// Writes "node,score" rows with a header line.
void write_scores_csv(std::ostream& os, const ScoreVector& scores);

}  // namespace mcpr
