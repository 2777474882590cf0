#include "bgossip/moments.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>

namespace bgossip {

namespace {

bool contains(std::span<const int> sorted, int v) { return std::binary_search(sorted.begin(), sorted.end(), v); }

std::size_t union_size(std::span<const int> x, std::span<const int> y) {
  std::size_t count = 0;
  auto i = x.begin();
  auto j = y.begin();
  while (i != x.end() && j != y.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++i;
      ++j;
    }
    ++count;
  }
  return count + static_cast<std::size_t>(std::distance(i, x.end()) + std::distance(j, y.end()));
}

std::vector<SenderOutcome> bga_pair(const Graph& graph, int a, int b) {
  const double share = 1.0 / graph.node_count();
  const auto in_a = graph.in_neighbors(a);
  const auto in_b = graph.in_neighbors(b);
  // The broadcaster v is uniform; only v in N-(a) or N-(b) changes a row.
  std::vector<int> senders;
  std::set_union(in_a.begin(), in_a.end(), in_b.begin(), in_b.end(), std::back_inserter(senders));
  std::vector<SenderOutcome> out;
  out.reserve(senders.size() + 1);
  for (int v : senders) out.push_back({contains(in_a, v) ? v : kNoSender, contains(in_b, v) ? v : kNoSender, share});
  const double none = 1.0 - senders.size() * share;
  if (none > 0.0) out.push_back({kNoSender, kNoSender, none});
  return out;
}

std::vector<SenderOutcome> cbga_pair(const Graph& graph, double p, int a, int b) {
  const auto in_a = graph.in_neighbors(a);
  const auto in_b = graph.in_neighbors(b);
  const double r = 1.0 - p;
  const double marginal_a = p * std::pow(r, static_cast<double>(in_a.size()));
  std::vector<SenderOutcome> out;
  if (a == b) {
    for (int s : in_a) out.push_back({s, s, marginal_a});
    const double none = 1.0 - marginal_a * in_a.size();
    if (none > 0.0) out.push_back({kNoSender, kNoSender, none});
    return out;
  }
  const double marginal_b = p * std::pow(r, static_cast<double>(in_b.size()));
  // U = {a, b} u N-(a) u N-(b): every node whose state decides both rows.
  std::size_t u = union_size(in_a, in_b) + 2;
  if (contains(in_b, a)) --u;
  if (contains(in_a, b)) --u;
  const double one_active = p * std::pow(r, static_cast<double>(u - 1));
  const double two_active = p * p * std::pow(r, static_cast<double>(u - 2));

  std::vector<double> row_a_mass(in_a.size(), 0.0);
  std::vector<double> row_b_mass(in_b.size(), 0.0);
  double joint_mass = 0.0;
  for (std::size_t i = 0; i < in_a.size(); ++i) {
    const int s = in_a[i];
    if (s == b) continue;  // b would be transmitting, so it hears nothing
    const bool s_reaches_b = contains(in_b, s);
    for (std::size_t j = 0; j < in_b.size(); ++j) {
      const int t = in_b[j];
      if (t == a) continue;
      double prob;
      if (s == t) {
        prob = one_active;
      } else {
        if (s_reaches_b || contains(in_a, t)) continue;  // a collision at a or b
        prob = two_active;
      }
      out.push_back({s, t, prob});
      row_a_mass[i] += prob;
      row_b_mass[j] += prob;
      joint_mass += prob;
    }
  }
  for (std::size_t i = 0; i < in_a.size(); ++i) {
    const double rest = marginal_a - row_a_mass[i];
    if (rest > 0.0) out.push_back({in_a[i], kNoSender, rest});
  }
  for (std::size_t j = 0; j < in_b.size(); ++j) {
    const double rest = marginal_b - row_b_mass[j];
    if (rest > 0.0) out.push_back({kNoSender, in_b[j], rest});
  }
  const double none = 1.0 - marginal_a * in_a.size() - marginal_b * in_b.size() + joint_mass;
  if (none > 0.0) out.push_back({kNoSender, kNoSender, none});
  return out;
}

}  // namespace

std::vector<SenderOutcome> sender_law(const Graph& graph, const AlgoParams& params, int a) {
  const auto in_a = graph.in_neighbors(a);
  const double each = params.algorithm() == Algorithm::kBGA
                          ? 1.0 / graph.node_count()
                          : params.p() * std::pow(1.0 - params.p(), static_cast<double>(in_a.size()));
  std::vector<SenderOutcome> out;
  for (int s : in_a) out.push_back({s, kNoSender, each});
  const double none = 1.0 - each * in_a.size();
  if (none > 0.0) out.push_back({kNoSender, kNoSender, none});
  return out;
}

std::vector<SenderOutcome> pair_sender_law(const Graph& graph, const AlgoParams& params, int a, int b) {
  const int n = graph.node_count();
  if (a < 0 || a >= n || b < 0 || b >= n) throw ValidationError("node", "node index out of range");
  return params.algorithm() == Algorithm::kBGA ? bga_pair(graph, a, b) : cbga_pair(graph, params.p(), a, b);
}

}  // namespace bgossip
