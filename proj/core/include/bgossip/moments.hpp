#pragma once

#include "bgossip/protocol.hpp"

#include <vector>

namespace bgossip {

inline constexpr int kNoSender = -1;

/// One joint outcome of the senders heard by rows a and b of P(t).
/// kNoSender means the row stays e_a (resp. e_b).
struct SenderOutcome {
  int sender_a;
  int sender_b;
  double probability;
};

/// Marginal law of the sender heard by node a, including kNoSender.
std::vector<SenderOutcome> sender_law(const Graph& graph, const AlgoParams& params, int a);

/// Exact joint law of the senders heard by nodes a and b in one step.
/// Row a of P(t) is (1-q) e_a + q e_s under sender s, e_a otherwise, so this
/// law determines every second moment E[P(a, i) P(b, j)]. Cost is
/// O(deg(a) deg(b) log N); no enumeration over active sets is involved.
/// Zero-probability outcomes are omitted.
std::vector<SenderOutcome> pair_sender_law(const Graph& graph, const AlgoParams& params, int a, int b);

/// Nonzero entries of row `a` of P(t) under `sender`: at most two.
struct RowEntry {
  int column;
  double value;
};
inline int row_entries(int a, int sender, double q, RowEntry (&out)[2]) {
  if (sender == kNoSender) {
    out[0] = {a, 1.0};
    return 1;
  }
  out[0] = {a, 1.0 - q};
  out[1] = {sender, q};
  return 2;
}

}  // namespace bgossip
