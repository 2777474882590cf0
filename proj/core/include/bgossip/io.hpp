#pragma once

#include "bgossip/analysis.hpp"
#include "bgossip/trajectory.hpp"

#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace bgossip {

/// printf "%.12g".
std::string format_number(double value);

/// {"n": N, "edges": [[source, target], ...], "cayley": {"moduli": [...],
/// "generators": [[...], ...]}}; "cayley" only when present.
std::string graph_to_json(const Graph& graph);
/// Throws ValidationError naming the offending field.
Graph graph_from_json(std::string_view text);
void save_graph(const std::filesystem::path& path, const Graph& graph);
Graph load_graph(const std::filesystem::path& path);

/// {rate, lower, upper, trB, method, bias_method, n, params, extras,
///  reachable_dimension, discrepancy_flags}; absent values are null.
std::string summary_to_json(const SpectralSummary& summary, int indent = 2);

std::string params_to_json(const AlgoParams& params);

/// CSV whose first line is "# schema: <name>/<version>".
class CsvWriter {
 public:
  CsvWriter(const std::filesystem::path& path, std::string_view schema, int version,
            const std::vector<std::string>& columns);
  CsvWriter(const CsvWriter&) = delete;
  CsvWriter& operator=(const CsvWriter&) = delete;

  /// Cells are written verbatim; use format_number for doubles.
  void row(const std::vector<std::string>& cells);

 private:
  std::ofstream out_;
  std::size_t width_;
};

struct TrajectoryMetadata {
  std::uint64_t graph_hash = 0;
  AlgoParams params = AlgoParams::bga(0.5);
  std::uint64_t seed = 0;
  StopRule stop;
  RecordMode mode = RecordMode::kMetricsOnly;
};

/// Columns t, x_ave, d, beta (and x_0..x_{N-1} in full mode), plus a JSON
/// sidecar at `<path>.json` with graph hash, params, seed policy and stop reason.
void write_trajectory(const std::filesystem::path& path, const TrajectoryRecord& record,
                      const TrajectoryMetadata& meta);

/// Writes `text` to `path`, creating parent directories.
void write_text(const std::filesystem::path& path, std::string_view text);
std::string read_text(const std::filesystem::path& path);

}  // namespace bgossip
