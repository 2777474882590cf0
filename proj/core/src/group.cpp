#include "bgossip/group.hpp"

#include "bgossip/types.hpp"

#include <string>

namespace bgossip {

namespace {

int reduce(long long value, int modulus) {
  long long r = value % modulus;
  return static_cast<int>(r < 0 ? r + modulus : r);
}

}  // namespace

CyclicGroup::CyclicGroup(std::vector<int> moduli, long long max_order) : moduli_(std::move(moduli)) {
  if (moduli_.empty()) throw ValidationError("moduli", "at least one cyclic factor is required");
  long long order = 1;
  for (int m : moduli_) {
    if (m < 1) throw ValidationError("moduli", "modulus " + std::to_string(m) + " is not positive");
    order *= m;
    if (order > max_order) {
      throw ValidationError("moduli", "group order exceeds the configured maximum " + std::to_string(max_order));
    }
  }
  order_ = static_cast<int>(order);
  strides_.assign(moduli_.size(), 1);
  for (int i = rank() - 2; i >= 0; --i) strides_[i] = strides_[i + 1] * moduli_[i + 1];
}

int CyclicGroup::index(std::span<const int> coords) const {
  if (static_cast<int>(coords.size()) != rank()) {
    throw ValidationError("element", "expected " + std::to_string(rank()) + " coordinates, got " +
                                         std::to_string(coords.size()));
  }
  int idx = 0;
  for (int i = 0; i < rank(); ++i) idx += reduce(coords[i], moduli_[i]) * strides_[i];
  return idx;
}

std::vector<int> CyclicGroup::coords(int element) const {
  std::vector<int> c(moduli_.size());
  for (int i = 0; i < rank(); ++i) {
    c[i] = element / strides_[i];
    element %= strides_[i];
  }
  return c;
}

int CyclicGroup::add(int a, int b) const {
  if (rank() == 1) return reduce(static_cast<long long>(a) + b, order_);
  int idx = 0;
  for (int i = 0; i < rank(); ++i) {
    const int ai = (a / strides_[i]) % moduli_[i];
    const int bi = (b / strides_[i]) % moduli_[i];
    idx += reduce(ai + bi, moduli_[i]) * strides_[i];
  }
  return idx;
}

int CyclicGroup::neg(int a) const {
  if (rank() == 1) return reduce(-static_cast<long long>(a), order_);
  int idx = 0;
  for (int i = 0; i < rank(); ++i) {
    const int ai = (a / strides_[i]) % moduli_[i];
    idx += reduce(-ai, moduli_[i]) * strides_[i];
  }
  return idx;
}

int CyclicGroup::sub(int a, int b) const { return add(a, neg(b)); }

}  // namespace bgossip
