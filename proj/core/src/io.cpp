#include "bgossip/io.hpp"

#include "bgossip/rng.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <sstream>

namespace bgossip {

using nlohmann::json;

std::string format_number(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

namespace {

json number_or_null(const std::optional<double>& v) {
  if (!v || !std::isfinite(*v)) return nullptr;
  return *v;
}

json params_json(const AlgoParams& params) {
  json j{{"algorithm", std::string(to_string(params.algorithm()))}, {"q", params.q()}};
  if (params.maybe_p()) j["p"] = *params.maybe_p();
  return j;
}

template <typename T>
T field_as(const json& j, const char* field) {
  if (!j.contains(field)) throw ValidationError(field, "missing field");
  try {
    return j.at(field).get<T>();
  } catch (const json::exception& e) {
    throw ValidationError(field, std::string("wrong type: ") + e.what());
  }
}

}  // namespace

std::string params_to_json(const AlgoParams& params) { return params_json(params).dump(); }

std::string graph_to_json(const Graph& graph) {
  json j;
  j["n"] = graph.node_count();
  json edges = json::array();
  for (const auto& [s, t] : graph.edges()) edges.push_back({s, t});
  j["edges"] = std::move(edges);
  if (const auto& c = graph.cayley()) {
    json gens = json::array();
    for (int g : c->generators) gens.push_back(c->group.coords(g));
    j["cayley"] = {{"moduli", c->group.moduli()}, {"generators", std::move(gens)}};
  }
  return j.dump();
}

Graph graph_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError("graph", std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw ValidationError("graph", "top-level value must be an object");
  const int n = field_as<int>(j, "n");
  const auto raw = field_as<std::vector<std::vector<int>>>(j, "edges");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(raw.size());
  for (const auto& e : raw) {
    if (e.size() != 2) throw ValidationError("edges", "each edge must be a [source, target] pair");
    edges.emplace_back(e[0], e[1]);
  }
  Graph g = Graph::from_edges(n, edges);
  if (j.contains("cayley") && !j["cayley"].is_null()) {
    const json& c = j["cayley"];
    const auto moduli = field_as<std::vector<int>>(c, "moduli");
    const auto gens = field_as<std::vector<std::vector<int>>>(c, "generators");
    CyclicGroup group(moduli);
    std::vector<int> idx;
    for (const auto& coords : gens) {
      if (static_cast<int>(coords.size()) != group.rank()) {
        throw ValidationError("cayley.generators", "generator rank differs from the number of moduli");
      }
      idx.push_back(group.index(coords));
    }
    g.attach_cayley(CayleyStructure{group, idx, false, false});
  }
  return g;
}

void write_text(const std::filesystem::path& path, std::string_view text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << text;
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("path", "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void save_graph(const std::filesystem::path& path, const Graph& graph) { write_text(path, graph_to_json(graph) + "\n"); }

Graph load_graph(const std::filesystem::path& path) { return graph_from_json(read_text(path)); }

std::string summary_to_json(const SpectralSummary& s, int indent) {
  json j;
  j["n"] = s.n;
  j["params"] = params_json(s.params);
  j["method"] = std::string(to_string(s.method));
  j["rate"] = number_or_null(s.rate);
  j["lower"] = s.lower;
  j["upper"] = s.upper;
  j["bias_method"] = std::string(to_string(s.bias_method));
  j["trB"] = number_or_null(s.trB);
  j["reachable_dimension"] = s.reachable_dimension ? json(*s.reachable_dimension) : json(nullptr);
  j["extras"] = s.extras;
  j["discrepancy_flags"] = s.discrepancy_flags;
  if (s.invariant_vector.size() > 0) {
    j["invariant_vector"] = std::vector<double>(s.invariant_vector.data(),
                                                s.invariant_vector.data() + s.invariant_vector.size());
  }
  if (s.B) {
    json rows = json::array();
    for (int i = 0; i < s.B->rows(); ++i) {
      std::vector<double> r(s.B->cols());
      for (int k = 0; k < s.B->cols(); ++k) r[k] = (*s.B)(i, k);
      rows.push_back(std::move(r));
    }
    j["B"] = std::move(rows);
  }
  return j.dump(indent);
}

CsvWriter::CsvWriter(const std::filesystem::path& path, std::string_view schema, int version,
                     const std::vector<std::string>& columns)
    : width_(columns.size()) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  out_.open(path, std::ios::binary);
  if (!out_) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out_ << "# schema: " << schema << "/" << version << "\n";
  for (std::size_t i = 0; i < columns.size(); ++i) out_ << (i ? "," : "") << columns[i];
  out_ << "\n";
}

void CsvWriter::row(const std::vector<std::string>& cells) {
  if (cells.size() != width_) throw std::logic_error("CSV row width differs from the header");
  for (std::size_t i = 0; i < cells.size(); ++i) out_ << (i ? "," : "") << cells[i];
  out_ << "\n";
}

void write_trajectory(const std::filesystem::path& path, const TrajectoryRecord& record,
                      const TrajectoryMetadata& meta) {
  std::vector<std::string> cols{"t", "x_ave", "d", "beta"};
  const bool full = meta.mode == RecordMode::kFull;
  const int n = static_cast<int>(record.final_state.size());
  if (full) {
    for (int i = 0; i < n; ++i) cols.push_back("x_" + std::to_string(i));
  }
  {
    CsvWriter csv(path, full ? "bgossip.trajectory.full" : "bgossip.trajectory.metrics", 1, cols);
    for (std::size_t t = 0; t < record.averages.size(); ++t) {
      std::vector<std::string> cells{std::to_string(t), format_number(record.averages[t]),
                                     format_number(record.dispersion[t]), format_number(record.bias[t])};
      if (full) {
        for (int i = 0; i < n; ++i) cells.push_back(format_number(record.states[t][i]));
      }
      csv.row(cells);
    }
  }
  char hash[32];
  std::snprintf(hash, sizeof hash, "%016llx", static_cast<unsigned long long>(meta.graph_hash));
  const json side{{"graph_hash", hash},
                  {"params", params_json(meta.params)},
                  {"seed", {{"master", meta.seed}, {"rng", std::string(kRngAlgorithm)}}},
                  {"stop", {{"tol", meta.stop.tol}, {"max_steps", meta.stop.max_steps}}},
                  {"record", full ? "full" : "metrics_only"},
                  {"steps", record.steps},
                  {"stop_reason", std::string(to_string(record.stop_reason))}};
  write_text(path.string() + ".json", side.dump(2) + "\n");
}

}  // namespace bgossip
