#pragma once

#include <span>
#include <vector>

namespace bgossip {

/// Finite Abelian group Z_{m1} x ... x Z_{md}. Elements are addressed by a
/// dense row-major index in [0, order()); the last coordinate varies fastest.
class CyclicGroup {
 public:
  CyclicGroup() = default;
  /// Throws ValidationError for empty moduli, non-positive moduli, or an
  /// order above `max_order`.
  explicit CyclicGroup(std::vector<int> moduli, long long max_order = 1LL << 30);

  int order() const noexcept { return order_; }
  int rank() const noexcept { return static_cast<int>(moduli_.size()); }
  const std::vector<int>& moduli() const noexcept { return moduli_; }

  /// Coordinates are reduced modulo each modulus, so negative values are fine.
  int index(std::span<const int> coords) const;
  std::vector<int> coords(int element) const;

  int add(int a, int b) const;
  int sub(int a, int b) const;
  int neg(int a) const;

  bool operator==(const CyclicGroup& other) const { return moduli_ == other.moduli_; }

 private:
  std::vector<int> moduli_;
  std::vector<int> strides_;
  int order_ = 1;
};

}  // namespace bgossip
