#include "bgossip/protocol.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace bgossip {

std::string_view to_string(Algorithm algorithm) { return algorithm == Algorithm::kBGA ? "bga" : "cbga"; }

std::optional<Algorithm> parse_algorithm(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  if (lower == "bga") return Algorithm::kBGA;
  if (lower == "cbga") return Algorithm::kCBGA;
  return std::nullopt;
}

namespace {

void check_unit_open(const char* field, double value) {
  if (!(value > 0.0 && value < 1.0)) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.12g is outside the open interval (0, 1)", value);
    throw ValidationError(field, buf);
  }
}

std::uint64_t wake_threshold(double p) { return static_cast<std::uint64_t>(std::ldexp(p, 64)); }

int draw_broadcaster(int n, Rng& rng) { return std::uniform_int_distribution<int>(0, n - 1)(rng); }

}  // namespace

AlgoParams AlgoParams::bga(double q) {
  check_unit_open("q", q);
  return AlgoParams(Algorithm::kBGA, q, std::nullopt);
}

AlgoParams AlgoParams::cbga(double q, double p) {
  check_unit_open("q", q);
  check_unit_open("p", p);
  return AlgoParams(Algorithm::kCBGA, q, p);
}

double AlgoParams::p() const {
  if (!p_) throw std::logic_error("BGA parameters carry no wake probability");
  return *p_;
}

std::string AlgoParams::describe() const {
  char buf[96];
  if (p_) {
    std::snprintf(buf, sizeof buf, "cbga(q=%.12g, p=%.12g)", q_, *p_);
  } else {
    std::snprintf(buf, sizeof buf, "bga(q=%.12g)", q_);
  }
  return buf;
}

StepRealization::StepRealization(int n, double q, std::vector<int> active, std::vector<Transmission> transmissions)
    : n_(n), q_(q), active_(std::move(active)), transmissions_(std::move(transmissions)) {
  std::sort(active_.begin(), active_.end());
  std::sort(transmissions_.begin(), transmissions_.end(),
            [](const Transmission& a, const Transmission& b) { return a.receiver < b.receiver; });
}

std::vector<int> StepRealization::receiver_set() const {
  std::vector<int> out;
  out.reserve(transmissions_.size());
  for (const auto& t : transmissions_) out.push_back(t.receiver);
  return out;
}

Matrix StepRealization::update_matrix() const {
  Matrix p = Matrix::Identity(n_, n_);
  for (const auto& t : transmissions_) {
    p(t.receiver, t.receiver) = 1.0 - q_;
    p(t.receiver, t.sender) = q_;
  }
  return p;
}

Matrix StepRealization::realized_laplacian() const {
  Matrix l = Matrix::Zero(n_, n_);
  for (const auto& t : transmissions_) {
    l(t.receiver, t.receiver) += 1.0;
    l(t.receiver, t.sender) -= 1.0;
  }
  return l;
}

void StepRealization::apply(std::span<double> x) const {
  // Senders never receive in the same step, so in-place updates are safe.
  for (const auto& t : transmissions_) x[t.receiver] = (1.0 - q_) * x[t.receiver] + q_ * x[t.sender];
}

StepRealization bga_step_for(const Graph& graph, const AlgoParams& params, int broadcaster) {
  if (broadcaster < 0 || broadcaster >= graph.node_count()) throw ValidationError("broadcaster", "node out of range");
  std::vector<Transmission> tx;
  for (int u : graph.out_neighbors(broadcaster)) tx.push_back({broadcaster, u});
  return StepRealization(graph.node_count(), params.q(), {broadcaster}, std::move(tx));
}

StepRealization cbga_step_for(const Graph& graph, const AlgoParams& params, std::span<const char> active) {
  const int n = graph.node_count();
  if (static_cast<int>(active.size()) != n) throw ValidationError("active", "mask length differs from N");
  std::vector<int> act;
  std::vector<Transmission> tx;
  for (int v = 0; v < n; ++v) {
    if (active[v]) act.push_back(v);
  }
  for (int u = 0; u < n; ++u) {
    if (active[u]) continue;
    int heard = 0;
    int sender = -1;
    for (int v : graph.in_neighbors(u)) {
      if (active[v]) {
        ++heard;
        sender = v;
      }
    }
    if (heard == 1) tx.push_back({sender, u});
  }
  return StepRealization(n, params.q(), std::move(act), std::move(tx));
}

StepRealization sample_bga_step(const Graph& graph, const AlgoParams& params, Rng& rng) {
  if (params.algorithm() != Algorithm::kBGA) throw ValidationError("algorithm", "expected BGA parameters");
  return bga_step_for(graph, params, draw_broadcaster(graph.node_count(), rng));
}

StepRealization sample_cbga_step(const Graph& graph, const AlgoParams& params, Rng& rng) {
  if (params.algorithm() != Algorithm::kCBGA) throw ValidationError("algorithm", "expected CBGA parameters");
  const std::uint64_t threshold = wake_threshold(params.p());
  std::vector<char> active(graph.node_count());
  for (auto& a : active) a = rng() < threshold ? 1 : 0;
  return cbga_step_for(graph, params, active);
}

StepRealization sample_step(const Graph& graph, const AlgoParams& params, Rng& rng) {
  return params.algorithm() == Algorithm::kBGA ? sample_bga_step(graph, params, rng)
                                               : sample_cbga_step(graph, params, rng);
}

void for_each_realization(const Graph& graph, const AlgoParams& params,
                          const std::function<void(double, const StepRealization&)>& visit, int cap) {
  const int n = graph.node_count();
  if (params.algorithm() == Algorithm::kBGA) {
    for (int v = 0; v < n; ++v) visit(1.0 / n, bga_step_for(graph, params, v));
    return;
  }
  if (n > cap) {
    throw ValidationError("n", "CBGA enumeration over 2^N active sets is capped at N=" + std::to_string(cap) +
                                   "; use the Monte Carlo operator instead");
  }
  const double p = params.p();
  std::vector<char> active(n);
  for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
    int count = 0;
    for (int v = 0; v < n; ++v) {
      active[v] = (mask >> v) & 1U;
      count += active[v];
    }
    const double weight = std::pow(p, count) * std::pow(1.0 - p, n - count);
    visit(weight, cbga_step_for(graph, params, active));
  }
}

StepSampler::StepSampler(const Graph& graph, const AlgoParams& params)
    : graph_(&graph),
      params_(params),
      active_(graph.node_count(), 0),
      heard_count_(graph.node_count(), 0),
      heard_from_(graph.node_count(), -1) {
  if (params.algorithm() == Algorithm::kCBGA) threshold_ = wake_threshold(params.p());
}

void StepSampler::step(Rng& rng, std::span<double> x) {
  const double q = params_.q();
  const int n = graph_->node_count();
  if (params_.algorithm() == Algorithm::kBGA) {
    const int v = draw_broadcaster(n, rng);
    const double xv = x[v];
    for (int u : graph_->out_neighbors(v)) x[u] = (1.0 - q) * x[u] + q * xv;
    return;
  }
  // Branch-free wake draws: the active list is compacted by index arithmetic.
  active_list_.resize(n);
  int count = 0;
  for (int v = 0; v < n; ++v) {
    const char on = rng() < threshold_;
    active_[v] = on;
    active_list_[count] = v;
    count += on;
  }
  active_list_.resize(count);
  touched_.clear();
  for (int a : active_list_) {
    for (int u : graph_->out_neighbors(a)) {
      if (heard_count_[u]++ == 0) touched_.push_back(u);
      heard_from_[u] = a;
    }
  }
  for (int u : touched_) {
    if (heard_count_[u] == 1 && !active_[u]) x[u] = (1.0 - q) * x[u] + q * x[heard_from_[u]];
    heard_count_[u] = 0;
  }
}

}  // namespace bgossip
