#pragma once

#include <cstdint>
#include <random>

namespace mcpr {

/// Seeded random stream shared by every sampling step of one run.
///
/// Two streams built from the same seed produce identical draws, so a run
/// is reproducible from (seed, arrival order) alone.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const noexcept { return seed_; }
  std::mt19937_64& engine() noexcept { return engine_; }

  /// Uniform integer in [0, bound); bound must be positive.
  std::uint64_t uniform_index(std::uint64_t bound) {
    return std::uniform_int_distribution<std::uint64_t>(0, bound - 1)(engine_);
  }

  double uniform01() {
    return std::uniform_real_distribution<double>(0.0, 1.0)(engine_);
  }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace mcpr
