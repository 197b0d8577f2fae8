#include "mcpr/adversary.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace mcpr {

namespace {

void emit_binary_subtree(std::uint32_t t, std::uint32_t tree_size,
                         std::uint32_t N, int row, ArrivalScript& script) {
  const auto id = [N](std::uint32_t node) { return N - 1 + node; };
  for (std::uint32_t child = 2 * t; child <= 2 * t + 1; ++child) {
    if (child > tree_size) return;
    script.edges.push_back({id(t), id(child), row});
    emit_binary_subtree(child, tree_size, N, row + 1, script);
  }
}

void emit_dary_subtree(std::uint32_t t, std::uint32_t N, std::uint32_t d,
                       int row, ArrivalScript& script) {
  for (std::uint32_t j = 1; j <= d; ++j) {
    const std::uint64_t child = std::uint64_t{d} * t + j;
    if (child >= N) return;
    script.edges.push_back(
        {N + t, N + static_cast<std::uint32_t>(child), row});
    emit_dary_subtree(static_cast<std::uint32_t>(child), N, d, row + 1,
                      script);
  }
}

}  // namespace

ArrivalScript build_binary(std::uint32_t N) {
  if (N < 2 || !std::has_single_bit(N)) {
    throw std::invalid_argument("binary family needs N a power of two >= 2, got " +
                                std::to_string(N));
  }
  ArrivalScript script;
  script.family = Family::kBinary;
  script.d = 2;
  script.N = N;
  script.n = 2 * std::size_t{N} - 1;
  script.top_row = N;
  script.edges.reserve(2 * std::size_t{N} - 2);
  const NodeId root = N;
  for (NodeId top = 0; top < N; ++top) {
    script.edges.push_back({top, root, kTopRowLabel});
  }
  emit_binary_subtree(1, N - 1, N, 0, script);
  return script;
}

ArrivalScript build_dary(std::uint32_t N, std::uint32_t d) {
  if (N < 1) throw std::invalid_argument("d-ary family needs N >= 1");
  if (d < 2) throw std::invalid_argument("d-ary family needs d >= 2");
  ArrivalScript script;
  script.family = Family::kDary;
  script.d = d;
  script.N = N;
  script.n = 2 * std::size_t{N};
  script.top_row = N;
  script.edges.reserve(2 * std::size_t{N} - 1);
  const NodeId root = N;
  for (NodeId top = 0; top < N; ++top) {
    script.edges.push_back({top, root, kTopRowLabel});
  }
  emit_dary_subtree(0, N, d, 0, script);
  return script;
}

ArrivalScript random_order(const ArrivalScript& script, RngStream& rng) {
  ArrivalScript shuffled = script;
  std::shuffle(shuffled.edges.begin(), shuffled.edges.end(), rng.engine());
  return shuffled;
}

double harmonic(std::uint32_t d) {
  if (d < 1) throw std::invalid_argument("harmonic number needs d >= 1");
  double sum = 0.0;
  for (std::uint32_t j = d; j >= 1; --j) sum += 1.0 / j;
  return sum;
}

double predicted_row_updates(double R, double N, double epsilon,
                             std::uint32_t d, std::uint32_t row) {
  return R * N * std::pow((1.0 - epsilon) * harmonic(d), row);
}

std::uint32_t full_rows(std::uint64_t N, std::uint32_t d) {
  if (d < 2) throw std::invalid_argument("branching factor must be >= 2");
  std::uint32_t rows = 0;
  for (std::uint64_t width = d; width <= N; width *= d) ++rows;
  return rows;
}

double predicted_total(double R, double N, double epsilon, std::uint32_t d) {
  const double ratio = (1.0 - epsilon) * harmonic(d);
  const auto rows = full_rows(static_cast<std::uint64_t>(N), d);
  if (std::abs(ratio - 1.0) < 1e-12) return rows * R * N;
  return R * N * (std::pow(ratio, rows) - 1.0) / (ratio - 1.0);
}

double growth_exponent(double epsilon, std::uint32_t d) {
  return std::log((1.0 - epsilon) * harmonic(d)) / std::log(d);
}

}  // namespace mcpr
