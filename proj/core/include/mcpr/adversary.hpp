#pragma once

#include <cstdint>

#include "mcpr/rng.hpp"
#include "mcpr/script.hpp"

namespace mcpr {

/// Top row of N nodes feeding the root of a balanced binary tree on N - 1
/// nodes. N must be a power of two, N >= 2.
///
/// Node ids: top row [0, N), heap tree node t (1-based) -> N - 1 + t.
/// Arrival order: the N top edges, then the tree edges in preorder with the
/// left edge of a node (and its whole subtree) before the right edge.
/// n = 2N - 1, m = 2N - 2.
ArrivalScript build_binary(std::uint32_t N);

/// Top row of N nodes feeding the root of a complete d-ary tree on N nodes
/// filled in level order. Children of a node arrive in index order, so the
/// j-th child edge finds its parent with outdegree j.
///
/// Node ids: top row [0, N), tree node t (0-based level order) -> N + t.
/// n = 2N, m = 2N - 1.
ArrivalScript build_dary(std::uint32_t N, std::uint32_t d);

/// Uniformly permuted copy of the script; row labels travel with edges.
ArrivalScript random_order(const ArrivalScript& script, RngStream& rng);

/// H_d = sum_{j=1..d} 1/j.
double harmonic(std::uint32_t d);

/// R * N * ((1 - eps) * H_d)^row: expected reroutes of top-row walks while
/// the edges leaving tree row `row` arrive.
double predicted_row_updates(double R, double N, double epsilon,
                             std::uint32_t d, std::uint32_t row);

/// Number of full tree rows, floor(log_d N).
std::uint32_t full_rows(std::uint64_t N, std::uint32_t d);

/// Sum of predicted_row_updates over the full rows. Falls back to
/// rows * R * N when (1 - eps) * H_d == 1.
double predicted_total(double R, double N, double epsilon, std::uint32_t d);

/// log((1 - eps) * H_d) / log d, the growth exponent of total / (R N) in m.
double growth_exponent(double epsilon, std::uint32_t d);

}  // namespace mcpr
