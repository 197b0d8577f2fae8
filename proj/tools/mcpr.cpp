// mcpr: generate arrival scripts, replay them through the incremental
// Monte Carlo PageRank engine, and summarize the update cost.

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mcpr/adversary.hpp"
#include "mcpr/experiment.hpp"
#include "mcpr/pagerank.hpp"
#include "mcpr/script.hpp"

namespace {

struct FamilyOptions {
  std::string family = "binary";
  std::uint32_t d = 2;
  std::uint32_t N = 16;
};

void add_family_options(CLI::App* cmd, FamilyOptions& opts) {
  cmd->add_option("--family", opts.family, "Graph family")
      ->check(CLI::IsMember({"binary", "dary"}));
  cmd->add_option("--d", opts.d, "Branching factor of the d-ary family")
      ->check(CLI::Range(2u, 1000000u));
  cmd->add_option("--N", opts.N, "Top-row width");
}

mcpr::ArrivalScript make_script(const FamilyOptions& opts) {
  const auto family = mcpr::parse_family(opts.family);
  return mcpr::build_family(family, opts.N,
                            family == mcpr::Family::kBinary ? 2 : opts.d);
}

mcpr::ArrivalScript load_script(const std::string& path, std::size_t n) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return mcpr::read_script(in, n);
}

// Writes to the file named by `path`, or stdout when it is empty or "-".
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw std::runtime_error("cannot write " + path);
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

std::vector<mcpr::Order> parse_orders(const std::string& order) {
  if (order == "both") return {mcpr::Order::kAdversarial, mcpr::Order::kRandom};
  return {mcpr::parse_order(order)};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Incremental Monte Carlo PageRank under adversarial edge order"};
  app.require_subcommand(1);

  // generate
  FamilyOptions gen_family;
  std::string gen_order = "adversarial";
  std::uint64_t gen_seed = 1;
  std::string gen_format = "script";
  std::string gen_out;
  auto* generate = app.add_subcommand("generate", "Emit an arrival script");
  add_family_options(generate, gen_family);
  generate->add_option("--order", gen_order)
      ->check(CLI::IsMember({"adversarial", "random"}));
  generate->add_option("--seed", gen_seed, "Seed for random order");
  generate->add_option("--format", gen_format,
                       "script: 'u v row' with header; edges: plain 'u v'")
      ->check(CLI::IsMember({"script", "edges"}));
  generate->add_option("--out", gen_out, "Output file (default stdout)");

  // replay
  FamilyOptions rep_family;
  std::string rep_script;
  std::uint32_t rep_R = 10;
  double rep_eps = 0.2;
  std::uint64_t rep_seed = 1;
  std::string rep_order = "adversarial";
  std::string rep_dump;
  std::string rep_out;
  auto* replay_cmd = app.add_subcommand("replay", "Replay one script, print a CSV record");
  add_family_options(replay_cmd, rep_family);
  replay_cmd->add_option("--script", rep_script, "Replay this script file instead of a family");
  replay_cmd->add_option("--R", rep_R, "Walks per node")->check(CLI::PositiveNumber);
  replay_cmd->add_option("--epsilon", rep_eps, "Teleport probability")
      ->check(CLI::Range(0.0, 1.0));
  replay_cmd->add_option("--seed", rep_seed);
  replay_cmd->add_option("--order", rep_order)
      ->check(CLI::IsMember({"adversarial", "random"}));
  replay_cmd->add_option("--dump-walks", rep_dump, "Write final walks to this file");
  replay_cmd->add_option("--out", rep_out);

  // sweep
  std::string sw_family = "binary";
  std::uint32_t sw_d = 2;
  std::vector<std::uint32_t> sw_sizes{256, 1024, 4096};
  std::uint32_t sw_R = 10;
  double sw_eps = 0.2;
  std::vector<std::uint64_t> sw_seeds{1, 2, 3};
  std::string sw_order = "both";
  unsigned sw_threads = 0;
  std::string sw_out;
  auto* sweep_cmd = app.add_subcommand("sweep", "Run a grid of replays and emit CSV");
  sweep_cmd->add_option("--family", sw_family)->check(CLI::IsMember({"binary", "dary"}));
  sweep_cmd->add_option("--d", sw_d)->check(CLI::Range(2u, 1000000u));
  sweep_cmd->add_option("--N", sw_sizes, "Top-row widths")->delimiter(',');
  sweep_cmd->add_option("--R", sw_R)->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--epsilon", sw_eps)->check(CLI::Range(0.0, 1.0));
  sweep_cmd->add_option("--seeds", sw_seeds)->delimiter(',');
  sweep_cmd->add_option("--order", sw_order)
      ->check(CLI::IsMember({"adversarial", "random", "both"}));
  sweep_cmd->add_option("--threads", sw_threads, "Worker threads (0: all cores)");
  sweep_cmd->add_option("--out", sw_out);

  // fit
  std::string fit_in;
  std::string fit_order = "adversarial";
  auto* fit_cmd = app.add_subcommand("fit", "Fit the log-log growth exponent of a sweep CSV");
  fit_cmd->add_option("csv", fit_in, "Sweep CSV")->required();
  fit_cmd->add_option("--order", fit_order)
      ->check(CLI::IsMember({"adversarial", "random"}));

  // verify-rows
  FamilyOptions vr_family;
  vr_family.N = 4096;
  std::uint32_t vr_R = 50;
  double vr_eps = 0.2;
  std::vector<std::uint64_t> vr_seeds{1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  unsigned vr_threads = 0;
  auto* rows_cmd = app.add_subcommand("verify-rows", "Per-row reroutes against the row formula");
  add_family_options(rows_cmd, vr_family);
  rows_cmd->add_option("--R", vr_R)->check(CLI::PositiveNumber);
  rows_cmd->add_option("--epsilon", vr_eps)->check(CLI::Range(0.0, 1.0));
  rows_cmd->add_option("--seeds", vr_seeds)->delimiter(',');
  rows_cmd->add_option("--threads", vr_threads);

  // estimate
  std::string est_edges;
  std::size_t est_n = 0;
  std::uint32_t est_R = 100;
  double est_eps = 0.2;
  std::uint64_t est_seed = 1;
  std::string est_out;
  auto* est_cmd = app.add_subcommand("estimate", "Estimator vs exact oracle on an edge list");
  est_cmd->add_option("edges", est_edges, "Edge list, one 'u v' per line in arrival order")
      ->required();
  est_cmd->add_option("--n", est_n, "Node count (default: max id + 1)");
  est_cmd->add_option("--R", est_R)->check(CLI::PositiveNumber);
  est_cmd->add_option("--epsilon", est_eps)->check(CLI::Range(0.0, 1.0));
  est_cmd->add_option("--seed", est_seed);
  est_cmd->add_option("--out", est_out, "Write node,score CSV here");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*generate) {
      auto script = make_script(gen_family);
      if (gen_order == "random") {
        mcpr::RngStream rng(gen_seed);
        script = mcpr::random_order(script, rng);
      }
      Output out(gen_out);
      if (gen_format == "edges") {
        mcpr::write_edge_list(out.stream(), script);
      } else {
        mcpr::write_script(out.stream(), script);
      }
    } else if (*replay_cmd) {
      const auto script =
          rep_script.empty() ? make_script(rep_family) : load_script(rep_script, 0);
      std::unique_ptr<std::ofstream> dump;
      if (!rep_dump.empty()) dump = std::make_unique<std::ofstream>(rep_dump);
      const auto record = mcpr::replay(
          script, {.walks_per_node = rep_R,
                   .epsilon = rep_eps,
                   .seed = rep_seed,
                   .order = mcpr::parse_order(rep_order),
                   .walk_dump = dump.get()});
      Output out(rep_out);
      mcpr::write_csv(out.stream(), {record});
    } else if (*sweep_cmd) {
      const auto records = mcpr::sweep({.family = mcpr::parse_family(sw_family),
                                        .d = sw_family == "binary" ? 2 : sw_d,
                                        .sizes = sw_sizes,
                                        .walks_per_node = sw_R,
                                        .epsilon = sw_eps,
                                        .seeds = sw_seeds,
                                        .orders = parse_orders(sw_order),
                                        .threads = sw_threads});
      Output out(sw_out);
      mcpr::write_csv(out.stream(), records);
    } else if (*fit_cmd) {
      std::ifstream in(fit_in);
      if (!in) throw std::runtime_error("cannot open " + fit_in);
      const auto records = mcpr::read_csv(in);
      const auto fit = mcpr::fit_exponent(records, mcpr::parse_order(fit_order));
      std::cout << "slope " << fit.slope << "\nintercept " << fit.intercept
                << "\nr2 " << fit.r2 << "\npoints " << fit.points << '\n';
    } else if (*rows_cmd) {
      const auto family = mcpr::parse_family(vr_family.family);
      const auto records = mcpr::sweep(
          {.family = family,
           .d = family == mcpr::Family::kBinary ? 2 : vr_family.d,
           .sizes = {vr_family.N},
           .walks_per_node = vr_R,
           .epsilon = vr_eps,
           .seeds = vr_seeds,
           .orders = {mcpr::Order::kAdversarial},
           .threads = vr_threads});
      std::cout << std::setw(4) << "row" << std::setw(16) << "empirical"
                << std::setw(16) << "predicted" << std::setw(12) << "rel_err"
                << '\n';
      for (const auto& c : mcpr::compare_rows(records)) {
        std::cout << std::setw(4) << c.row << std::fixed << std::setprecision(1)
                  << std::setw(16) << c.empirical << std::setw(16) << c.predicted
                  << std::setprecision(4) << std::setw(12) << c.relative_error
                  << '\n';
      }
    } else if (*est_cmd) {
      const auto script = load_script(est_edges, est_n);
      const auto report =
          mcpr::estimate_after_replay(script, est_R, est_eps, est_seed);
      std::cout << "tv_incremental " << report.tv_incremental
                << "\ntv_fresh " << report.tv_fresh << '\n';
      if (!est_out.empty()) {
        Output out(est_out);
        mcpr::write_scores_csv(out.stream(), report.incremental);
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
