#pragma once

#include "bgossip/graph.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace bgossip {

inline constexpr int kDefaultRggResampleBudget = 1000;

struct RggSample {
  Graph graph;
  std::vector<std::array<double, 2>> points;
  double radius = 0.0;
  /// Disconnected draws thrown away before `graph` was accepted.
  int discarded = 0;
  double mean_degree() const;
};

/// 0.8 * sqrt(log N / N).
double default_rgg_radius(int n);

/// N uniform points on the unit square, undirected edge when the distance is
/// at most `radius`. With `require_connected`, draws with sub-seeds
/// seed, seed+1, ... until a connected graph appears; throws
/// ComputationError when `resample_budget` draws are all disconnected.
RggSample build_rgg(int n, double radius, std::uint64_t seed, bool require_connected,
                    int resample_budget = kDefaultRggResampleBudget);

}  // namespace bgossip
