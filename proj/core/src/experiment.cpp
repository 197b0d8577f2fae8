#include "mcpr/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "mcpr/adversary.hpp"
#include "mcpr/graph.hpp"
#include "mcpr/pagerank.hpp"
#include "mcpr/walks.hpp"

namespace mcpr {

std::string_view to_string(Order order) {
  return order == Order::kAdversarial ? "adversarial" : "random";
}

Order parse_order(std::string_view name) {
  if (name == "adversarial") return Order::kAdversarial;
  if (name == "random") return Order::kRandom;
  throw std::invalid_argument("unknown order '" + std::string(name) + "'");
}

bool RunRecord::same_counters(const RunRecord& o) const {
  return family == o.family && d == o.d && N == o.N && n == o.n && m == o.m &&
         R == o.R && epsilon == o.epsilon && seed == o.seed &&
         order == o.order && reroutes_total == o.reroutes_total &&
         reroutes_toprow == o.reroutes_toprow &&
         steps_regenerated == o.steps_regenerated &&
         coin_flips == o.coin_flips &&
         top_edge_reroutes == o.top_edge_reroutes &&
         row_counts == o.row_counts &&
         row_counts_toprow == o.row_counts_toprow;
}

RunRecord replay(const ArrivalScript& input, const ReplayConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  RngStream rng(config.seed);
  const ArrivalScript script = config.order == Order::kRandom
                                   ? random_order(input, rng)
                                   : input;

  RunRecord record;
  record.family = script.family;
  record.d = script.d;
  record.N = script.N;
  record.n = script.n;
  record.m = script.m();
  record.R = config.walks_per_node;
  record.epsilon = config.epsilon;
  record.seed = config.seed;
  record.order = config.order;
  const auto rows = static_cast<std::size_t>(script.row_count());
  record.row_counts.assign(rows, 0);
  record.row_counts_toprow.assign(rows, 0);

  DynGraph g(script.n);
  WalkStore store(g, config.walks_per_node, config.epsilon, rng);
  std::vector<WalkId> rerouted;
  for (const auto& e : script.edges) {
    g.add_edge(e.u, e.v);
    rerouted.clear();
    const UpdateStats delta = store.on_edge_arrival(g, e.u, e.v, rng, &rerouted);
    std::uint64_t from_top = 0;
    for (const WalkId w : rerouted) {
      if (script.is_top_row(store.source(w))) ++from_top;
    }
    record.reroutes_total += delta.reroute_events;
    record.reroutes_toprow += from_top;
    record.steps_regenerated += delta.steps_regenerated;
    record.coin_flips += delta.coin_flips;
    if (e.row < 0) {
      record.top_edge_reroutes += delta.reroute_events;
    } else {
      record.row_counts[e.row] += delta.reroute_events;
      record.row_counts_toprow[e.row] += from_top;
    }
  }
  if (config.walk_dump != nullptr) store.dump(*config.walk_dump);
  record.wall_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return record;
}

ArrivalScript build_family(Family family, std::uint32_t N, std::uint32_t d) {
  switch (family) {
    case Family::kBinary:
      return build_binary(N);
    case Family::kDary:
      return build_dary(N, d);
    case Family::kCustom:
      break;
  }
  throw std::invalid_argument("custom scripts cannot be generated");
}

std::vector<RunRecord> sweep(const SweepConfig& config) {
  struct Task {
    std::size_t script;
    std::uint64_t seed;
    Order order;
  };
  std::vector<ArrivalScript> scripts;
  std::vector<Task> tasks;
  for (const auto N : config.sizes) {
    scripts.push_back(build_family(config.family, N, config.d));
    for (const auto seed : config.seeds) {
      for (const auto order : config.orders) {
        tasks.push_back({scripts.size() - 1, seed, order});
      }
    }
  }

  std::vector<RunRecord> records(tasks.size());
  std::atomic<std::size_t> next{0};
  const auto work = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      const Task& t = tasks[i];
      records[i] = replay(scripts[t.script],
                          {.walks_per_node = config.walks_per_node,
                           .epsilon = config.epsilon,
                           .seed = t.seed,
                           .order = t.order});
    }
  };
  unsigned threads = config.threads != 0 ? config.threads
                                         : std::thread::hardware_concurrency();
  threads = std::clamp<unsigned>(threads, 1,
                                 static_cast<unsigned>(std::max<std::size_t>(
                                     tasks.size(), 1)));
  if (threads == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(work);
  }
  return records;
}

namespace {

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

std::string join_counts(const std::vector<std::uint64_t>& counts) {
  std::string out;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (i != 0) out += ';';
    out += std::to_string(counts[i]);
  }
  return out;
}

std::vector<std::uint64_t> split_counts(const std::string& field) {
  std::vector<std::uint64_t> counts;
  std::istringstream in(field);
  std::string item;
  while (std::getline(in, item, ';')) {
    if (!item.empty()) counts.push_back(std::stoull(item));
  }
  return counts;
}

}  // namespace

void write_csv_header(std::ostream& os) { os << kCsvHeader << '\n'; }

void write_csv_row(std::ostream& os, const RunRecord& r) {
  os << to_string(r.family) << ',' << r.d << ',' << r.N << ',' << r.n << ','
     << r.m << ',' << r.R << ',' << format_double(r.epsilon) << ',' << r.seed
     << ',' << to_string(r.order) << ',' << r.reroutes_total << ','
     << r.reroutes_toprow << ',' << r.steps_regenerated << ','
     << join_counts(r.row_counts) << ',' << format_double(r.wall_ms) << '\n';
}

void write_csv(std::ostream& os, const std::vector<RunRecord>& records) {
  write_csv_header(os);
  for (const auto& r : records) write_csv_row(os, r);
}

std::vector<RunRecord> read_csv(std::istream& is) {
  std::vector<RunRecord> records;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line == kCsvHeader) continue;
    std::vector<std::string> fields;
    std::istringstream in(line);
    std::string field;
    while (std::getline(in, field, ',')) fields.push_back(field);
    if (fields.size() == 13) fields.emplace_back();
    if (fields.size() != 14) {
      throw std::invalid_argument("expected 14 CSV fields on line " +
                                  std::to_string(line_no));
    }
    RunRecord r;
    try {
      r.family = parse_family(fields[0]);
      r.d = static_cast<std::uint32_t>(std::stoul(fields[1]));
      r.N = static_cast<std::uint32_t>(std::stoul(fields[2]));
      r.n = std::stoull(fields[3]);
      r.m = std::stoull(fields[4]);
      r.R = static_cast<std::uint32_t>(std::stoul(fields[5]));
      r.epsilon = std::stod(fields[6]);
      r.seed = std::stoull(fields[7]);
      r.order = parse_order(fields[8]);
      r.reroutes_total = std::stoull(fields[9]);
      r.reroutes_toprow = std::stoull(fields[10]);
      r.steps_regenerated = std::stoull(fields[11]);
      r.row_counts = split_counts(fields[12]);
      r.wall_ms = fields[13].empty() ? 0.0 : std::stod(fields[13]);
    } catch (const std::logic_error& e) {
      throw std::invalid_argument("bad CSV line " + std::to_string(line_no) +
                                  ": " + e.what());
    }
    records.push_back(std::move(r));
  }
  return records;
}

FitResult fit_loglog(const std::vector<double>& x,
                     const std::vector<double>& y) {
  if (x.size() != y.size()) {
    throw std::invalid_argument("fit needs paired samples");
  }
  std::vector<double> distinct = x;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  if (distinct.size() < 3) {
    throw std::invalid_argument("fit needs at least 3 distinct x values");
  }
  const auto k = static_cast<double>(x.size());
  double sx = 0, sy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0) || !(y[i] > 0)) {
      throw std::invalid_argument("log-log fit needs positive values");
    }
    sx += std::log(x[i]);
    sy += std::log(y[i]);
  }
  const double mx = sx / k;
  const double my = sy / k;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = std::log(x[i]) - mx;
    const double dy = std::log(y[i]) - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  FitResult fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.r2 = syy == 0.0 ? 1.0 : (sxy * sxy) / (sxx * syy);
  fit.points = x.size();
  return fit;
}

std::vector<std::pair<std::size_t, double>> mean_reroutes_by_m(
    const std::vector<RunRecord>& records, Order order) {
  std::map<std::size_t, std::pair<double, std::size_t>> sums;
  for (const auto& r : records) {
    if (r.order != order) continue;
    auto& [sum, count] = sums[r.m];
    sum += static_cast<double>(r.reroutes_total);
    ++count;
  }
  std::vector<std::pair<std::size_t, double>> means;
  for (const auto& [m, acc] : sums) {
    means.emplace_back(m, acc.first / static_cast<double>(acc.second));
  }
  return means;
}

FitResult fit_exponent(const std::vector<RunRecord>& records, Order order) {
  std::map<std::size_t, std::pair<double, std::size_t>> sums;
  for (const auto& r : records) {
    if (r.order != order) continue;
    auto& [sum, count] = sums[r.m];
    sum += static_cast<double>(r.reroutes_total) /
           (static_cast<double>(r.R) * static_cast<double>(r.N));
    ++count;
  }
  std::vector<double> x, y;
  for (const auto& [m, acc] : sums) {
    x.push_back(static_cast<double>(m));
    y.push_back(acc.first / static_cast<double>(acc.second));
  }
  return fit_loglog(x, y);
}

std::vector<RowCheck> compare_rows(const std::vector<RunRecord>& records) {
  if (records.empty()) return {};
  const RunRecord& first = records.front();
  std::size_t rows = 0;
  for (const auto& r : records) {
    if (r.N != first.N || r.R != first.R || r.d != first.d ||
        r.epsilon != first.epsilon) {
      throw std::invalid_argument("row comparison needs one configuration");
    }
    rows = std::max(rows, r.row_counts_toprow.size());
  }
  std::vector<RowCheck> checks;
  for (std::size_t i = 0; i < rows; ++i) {
    double sum = 0.0;
    for (const auto& r : records) {
      if (i < r.row_counts_toprow.size()) {
        sum += static_cast<double>(r.row_counts_toprow[i]);
      }
    }
    RowCheck c;
    c.row = static_cast<int>(i);
    c.empirical = sum / static_cast<double>(records.size());
    c.predicted = predicted_row_updates(first.R, first.N, first.epsilon,
                                        first.d, static_cast<std::uint32_t>(i));
    c.relative_error = (c.empirical - c.predicted) / c.predicted;
    checks.push_back(c);
  }
  return checks;
}

EstimateReport estimate_after_replay(const ArrivalScript& script,
                                     std::uint32_t walks_per_node,
                                     double epsilon, std::uint64_t seed) {
  RngStream rng(seed);
  DynGraph g(script.n);
  WalkStore store(g, walks_per_node, epsilon, rng);
  for (const auto& e : script.edges) {
    g.add_edge(e.u, e.v);
    store.on_edge_arrival(g, e.u, e.v, rng);
  }
  EstimateReport report;
  report.incremental = estimate(store);
  const WalkStore fresh(g, walks_per_node, epsilon, rng);
  report.fresh = estimate(fresh);
  report.oracle = expected_scores(g, epsilon);
  report.tv_incremental = total_variation(report.incremental, report.oracle);
  report.tv_fresh = total_variation(report.fresh, report.oracle);
  return report;
}

}  // namespace mcpr
