#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <string>
#include <utility>

namespace bgossip {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Input rejected by a precondition; `field()` names the offending input.
class ValidationError : public std::invalid_argument {
 public:
  ValidationError(std::string field, const std::string& message)
      : std::invalid_argument(field + ": " + message), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// A computation could not finish: exhausted budget, no convergence, or a
/// degenerate spectrum.
class ComputationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace bgossip
