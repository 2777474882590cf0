#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace bgossip {

using Rng = std::mt19937_64;

/// Identifier written into run metadata so outputs name their generator.
inline constexpr std::string_view kRngAlgorithm = "mt19937_64/splitmix64-v1";

std::uint64_t splitmix64(std::uint64_t& state);

/// Reproducible per-trial streams: trial k is seeded by mixing (master, k)
/// through SplitMix64, so streams do not depend on scheduling.
class SeedPolicy {
 public:
  constexpr SeedPolicy() = default;
  constexpr explicit SeedPolicy(std::uint64_t master) : master_(master) {}

  constexpr std::uint64_t master() const noexcept { return master_; }
  std::uint64_t trial_seed(std::uint64_t trial) const;
  Rng trial_rng(std::uint64_t trial) const { return Rng(trial_seed(trial)); }
  /// Independent child policy, e.g. one per grid point.
  SeedPolicy child(std::uint64_t index) const { return SeedPolicy(trial_seed(index ^ 0x9e3779b97f4a7c15ULL)); }

 private:
  std::uint64_t master_ = 0;
};

/// Standard normal draws via the stdlib distribution.
inline double standard_normal(Rng& rng) { return std::normal_distribution<double>(0.0, 1.0)(rng); }

}  // namespace bgossip
