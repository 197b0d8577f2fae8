#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mcpr/graph.hpp"
#include "mcpr/rng.hpp"
#include "mcpr/script.hpp"
#include "mcpr/walks.hpp"

namespace mcpr::testing {

struct InvariantReport {
  std::size_t arrivals_checked = 0;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

/// Replays `script` with maintenance and, after every arrival, checks length
/// preservation, index consistency, step validity (strict for regenerated
/// suffixes) and counter relations. Stops recording after 20 violations.
InvariantReport check_replay_invariants(const ArrivalScript& script,
                                        std::uint32_t walks_per_node,
                                        double epsilon, std::uint64_t seed);

}  // namespace mcpr::testing
