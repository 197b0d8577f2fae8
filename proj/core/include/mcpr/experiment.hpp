#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "mcpr/script.hpp"

namespace mcpr {

enum class Order { kAdversarial, kRandom };

std::string_view to_string(Order order);
Order parse_order(std::string_view name);

struct ReplayConfig {
  std::uint32_t walks_per_node = 10;
  double epsilon = 0.2;
  std::uint64_t seed = 1;
  Order order = Order::kAdversarial;
  // When set, the final walk store is written here in walk-dump format.
  std::ostream* walk_dump = nullptr;
};

/// Counters of one replay. Reroutes are bucketed by the row label of the
/// arriving edge; top-row edges go to top_edge_reroutes.
struct RunRecord {
  Family family = Family::kCustom;
  std::uint32_t d = 0;
  std::uint32_t N = 0;
  std::size_t n = 0;
  std::size_t m = 0;
  std::uint32_t R = 0;
  double epsilon = 0.0;
  std::uint64_t seed = 0;
  Order order = Order::kAdversarial;
  std::uint64_t reroutes_total = 0;
  std::uint64_t reroutes_toprow = 0;
  std::uint64_t steps_regenerated = 0;
  std::uint64_t coin_flips = 0;
  std::uint64_t top_edge_reroutes = 0;
  std::vector<std::uint64_t> row_counts;         // all walks
  std::vector<std::uint64_t> row_counts_toprow;  // top-row-sourced walks
  double wall_ms = 0.0;

  /// Equality on everything except wall-clock time.
  bool same_counters(const RunRecord& other) const;
};

/// Replays a script edge by edge: the store starts on the edgeless graph,
/// and each arrival is an add_edge followed by walk maintenance. In random
/// mode the script is first shuffled with the run's own stream.
RunRecord replay(const ArrivalScript& script, const ReplayConfig& config);

struct SweepConfig {
  Family family = Family::kBinary;
  std::uint32_t d = 2;
  std::vector<std::uint32_t> sizes;
  std::uint32_t walks_per_node = 10;
  double epsilon = 0.2;
  std::vector<std::uint64_t> seeds;
  std::vector<Order> orders{Order::kAdversarial, Order::kRandom};
  unsigned threads = 0;  // 0: hardware concurrency
};

/// One record per (N, seed, order), in that nesting order.
std::vector<RunRecord> sweep(const SweepConfig& config);

ArrivalScript build_family(Family family, std::uint32_t N, std::uint32_t d);

inline constexpr std::string_view kCsvHeader =
    "family,d,N,n,m,R,epsilon,seed,order,reroutes_total,reroutes_toprow,"
    "steps_regenerated,row_counts,wall_ms";

void write_csv_header(std::ostream& os);
void write_csv_row(std::ostream& os, const RunRecord& record);
void write_csv(std::ostream& os, const std::vector<RunRecord>& records);
std::vector<RunRecord> read_csv(std::istream& is);

struct FitResult {
  double slope = 0.0;
  double intercept = 0.0;
  double r2 = 0.0;
  std::size_t points = 0;
};

/// Least squares of log y on log x. Needs >= 3 distinct x values.
FitResult fit_loglog(const std::vector<double>& x, const std::vector<double>& y);

/// Fits log(mean(reroutes_total) / (R N)) against log m over the records of
/// one order mode, averaging seeds per m before taking logs.
FitResult fit_exponent(const std::vector<RunRecord>& records, Order order);

/// Mean over seeds of reroutes_total for each distinct m of one order mode,
/// sorted by m.
std::vector<std::pair<std::size_t, double>> mean_reroutes_by_m(
    const std::vector<RunRecord>& records, Order order);

struct RowCheck {
  int row = 0;
  double empirical = 0.0;  // mean top-row-sourced reroutes over records
  double predicted = 0.0;
  double relative_error = 0.0;
};

/// Compares mean per-row top-row-sourced reroutes of the given records
/// (one family, one N, one R) with predicted_row_updates.
std::vector<RowCheck> compare_rows(const std::vector<RunRecord>& records);

struct EstimateReport {
  std::vector<double> incremental;  // estimate after edge-by-edge replay
  std::vector<double> fresh;        // estimate from walks built on final graph
  std::vector<double> oracle;       // normalized expected visit frequencies
  double tv_incremental = 0.0;
  double tv_fresh = 0.0;
};

/// Replays the script into a walk store, then scores the maintained walks
/// and an independent from-scratch store against the exact oracle.
EstimateReport estimate_after_replay(const ArrivalScript& script,
                                     std::uint32_t walks_per_node,
                                     double epsilon, std::uint64_t seed);

}  // namespace mcpr
