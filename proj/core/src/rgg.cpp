#include "bgossip/rgg.hpp"

#include "bgossip/rng.hpp"

#include <cmath>
#include <random>
#include <string>

namespace bgossip {

double RggSample::mean_degree() const {
  return static_cast<double>(graph.edge_count()) / graph.node_count();
}

double default_rgg_radius(int n) {
  if (n < 2) throw ValidationError("n", "RGG needs N >= 2");
  return 0.8 * std::sqrt(std::log(static_cast<double>(n)) / n);
}

namespace {

RggSample draw_once(int n, double radius, std::uint64_t seed) {
  Rng rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  RggSample sample;
  sample.radius = radius;
  sample.points.resize(n);
  for (auto& z : sample.points) {
    z[0] = unit(rng);
    z[1] = unit(rng);
  }
  const double r2 = radius * radius;
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double dx = sample.points[i][0] - sample.points[j][0];
      const double dy = sample.points[i][1] - sample.points[j][1];
      if (dx * dx + dy * dy <= r2) {
        edges.emplace_back(i, j);
        edges.emplace_back(j, i);
      }
    }
  }
  sample.graph = Graph::from_edges(n, edges);
  return sample;
}

}  // namespace

RggSample build_rgg(int n, double radius, std::uint64_t seed, bool require_connected, int resample_budget) {
  if (n < 2) throw ValidationError("n", "RGG needs N >= 2");
  if (!(radius >= 0.0) || !std::isfinite(radius)) throw ValidationError("radius", "radius must be finite and >= 0");
  if (resample_budget < 1) throw ValidationError("resample_budget", "budget must be >= 1");
  if (!require_connected) return draw_once(n, radius, seed);
  for (int attempt = 0; attempt < resample_budget; ++attempt) {
    RggSample sample = draw_once(n, radius, seed + static_cast<std::uint64_t>(attempt));
    if (sample.graph.is_strongly_connected()) {
      sample.discarded = attempt;
      return sample;
    }
  }
  throw ComputationError("RGG with N=" + std::to_string(n) + " stayed disconnected after " +
                         std::to_string(resample_budget) + " draws");
}

}  // namespace bgossip
