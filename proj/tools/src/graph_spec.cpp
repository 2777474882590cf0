#include "graph_spec.hpp"

#include "bgossip/io.hpp"
#include "bgossip/rgg.hpp"

#include <charconv>
#include <cmath>

namespace bgossip::cli {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string::npos) return out;
    start = pos + 1;
  }
}

long long to_integer(const std::string& s, const char* field) {
  long long v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw ValidationError(field, "'" + s + "' is not an integer");
  return v;
}

int to_int(const std::string& s, const char* field) {
  const long long v = to_integer(s, field);
  if (v < -(1LL << 30) || v > (1LL << 30)) throw ValidationError(field, "'" + s + "' is out of range");
  return static_cast<int>(v);
}

double to_real(const std::string& s, const char* field) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw ValidationError(field, "'" + s + "' is not a number");
  }
  if (used != s.size()) throw ValidationError(field, "'" + s + "' is not a number");
  return v;
}

}  // namespace

Graph parse_graph_spec(const std::string& spec, std::uint64_t default_seed) {
  if (spec.empty()) throw ValidationError("graph", "empty graph spec");
  if (spec.rfind("file:", 0) == 0) return load_graph(spec.substr(5));
  if (spec.size() > 5 && spec.compare(spec.size() - 5, 5, ".json") == 0) return load_graph(spec);
  const auto parts = split(spec, ':');
  const std::string& family = parts[0];
  if (family == "rgg") {
    if (parts.size() < 3 || parts.size() > 4) throw ValidationError("graph", "expected rgg:N:radius[:seed]");
    const int n = to_int(parts[1], "graph.N");
    const double radius = parts[2] == "auto" ? default_rgg_radius(n) : to_real(parts[2], "graph.radius");
    const std::uint64_t seed =
        parts.size() == 4 ? static_cast<std::uint64_t>(to_integer(parts[3], "graph.seed")) : default_seed;
    return build_rgg(n, radius, seed, true).graph;
  }
  if (family == "cayley") {
    if (parts.size() != 3) throw ValidationError("graph", "expected cayley:m1[xm2...]:g1|g2|...");
    std::vector<int> moduli;
    for (const auto& m : split(parts[1], 'x')) moduli.push_back(to_int(m, "graph.moduli"));
    std::vector<std::vector<int>> gens;
    for (const auto& g : split(parts[2], '|')) {
      std::vector<int> coords;
      for (const auto& c : split(g, ',')) coords.push_back(to_int(c, "graph.generators"));
      if (coords.size() != moduli.size()) {
        throw ValidationError("graph.generators", "generator '" + g + "' has the wrong number of coordinates");
      }
      gens.push_back(std::move(coords));
    }
    return build_cayley(moduli, gens);
  }
  const auto named = parse_named_family(family);
  if (!named) throw ValidationError("graph", "unknown graph family '" + family + "'");
  if (parts.size() != 2) throw ValidationError("graph", "expected " + family + ":size[,size...]");
  std::vector<int> sizes;
  for (const auto& s : split(parts[1], ',')) sizes.push_back(to_int(s, "graph.size"));
  return build_named_graph(*named, sizes);
}

std::vector<double> parse_real_list(const std::string& text, const char* field) {
  if (text.empty()) return {};
  const auto range = split(text, ':');
  if (range.size() == 3) {
    const double lo = to_real(range[0], field);
    const double hi = to_real(range[1], field);
    const double step = to_real(range[2], field);
    if (!(step > 0.0)) throw ValidationError(field, "range step must be > 0");
    std::vector<double> out;
    const long long count = std::llround(std::floor((hi - lo) / step + 1e-9));
    if (count < 0 || count > 1'000'000) throw ValidationError(field, "range is empty or too long");
    for (long long i = 0; i <= count; ++i) out.push_back(lo + i * step);
    return out;
  }
  if (range.size() != 1) throw ValidationError(field, "expected lo:hi:step or a comma list");
  std::vector<double> out;
  for (const auto& s : split(text, ',')) out.push_back(to_real(s, field));
  return out;
}

std::vector<int> parse_int_list(const std::string& text, const char* field) {
  if (text.empty()) return {};
  const auto range = split(text, ':');
  if (range.size() == 3) {
    const int lo = to_int(range[0], field);
    const int hi = to_int(range[1], field);
    const int step = to_int(range[2], field);
    if (step <= 0) throw ValidationError(field, "range step must be > 0");
    std::vector<int> out;
    for (int v = lo; v <= hi; v += step) out.push_back(v);
    return out;
  }
  if (range.size() != 1) throw ValidationError(field, "expected lo:hi:step or a comma list");
  std::vector<int> out;
  for (const auto& s : split(text, ',')) out.push_back(to_int(s, field));
  return out;
}

}  // namespace bgossip::cli
