#include "bgossip/spectral.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace bgossip {

std::vector<std::complex<double>> eigenvalues(const Matrix& m) {
  if (m.rows() != m.cols()) throw ValidationError("matrix", "matrix must be square");
  Eigen::EigenSolver<Matrix> es(m, false);
  if (es.info() != Eigen::Success) throw ComputationError("eigenvalue computation did not converge");
  const auto& ev = es.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

double spectral_radius(std::span<const std::complex<double>> spectrum) {
  double r = 0.0;
  for (const auto& z : spectrum) r = std::max(r, std::abs(z));
  return r;
}

double spectral_radius(const Matrix& m) { return spectral_radius(eigenvalues(m)); }

double spectral_radius_symmetric(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(m, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw ComputationError("symmetric eigenvalue computation did not converge");
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

double essential_spectral_radius(std::span<const std::complex<double>> spectrum, double unit_tolerance) {
  if (spectrum.empty()) throw ValidationError("spectrum", "empty spectrum");
  std::size_t nearest = 0;
  for (std::size_t i = 1; i < spectrum.size(); ++i) {
    if (std::abs(spectrum[i] - 1.0) < std::abs(spectrum[nearest] - 1.0)) nearest = i;
  }
  if (std::abs(spectrum[nearest] - 1.0) > unit_tolerance) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "no eigenvalue near 1: closest is %.12g%+.12gi", spectrum[nearest].real(),
                  spectrum[nearest].imag());
    throw ComputationError(buf);
  }
  double r = 0.0;
  for (std::size_t i = 0; i < spectrum.size(); ++i) {
    if (i != nearest) r = std::max(r, std::abs(spectrum[i]));
  }
  return r;
}

double essential_spectral_radius(const Matrix& m, double unit_tolerance) {
  return essential_spectral_radius(eigenvalues(m), unit_tolerance);
}

ReachableSpace reachable_space(const std::function<Matrix(const Matrix&)>& op, const Matrix& start, double tolerance,
                               int max_dimension, const std::function<void(Matrix&)>& project) {
  const double norm0 = start.norm();
  if (norm0 == 0.0) return {};
  std::vector<Matrix> basis{start / norm0};
  Matrix h;
  for (int k = 0;; ++k) {
    h.conservativeResizeLike(Matrix::Zero(k + 2, k + 1));
    Matrix w = op(basis[k]);
    if (project) project(w);
    const double image_norm = w.norm();
    for (int pass = 0; pass < 2; ++pass) {
      for (int j = 0; j <= k; ++j) {
        const double c = (basis[j].array() * w.array()).sum();
        h(j, k) += c;
        w -= c * basis[j];
      }
      // rounding in the subtraction would otherwise be amplified by 1/residual
      if (project) project(w);
    }
    const double residual = w.norm();
    if (residual <= tolerance * std::max(image_norm, 1e-300)) {
      ReachableSpace out;
      out.dimension = k + 1;
      out.projected = h.topLeftCorner(k + 1, k + 1);
      out.spectral_radius = spectral_radius(out.projected);
      return out;
    }
    if (k + 1 >= max_dimension) throw ComputationError("reachable space exceeds the dimension budget");
    h(k + 1, k) = residual;
    basis.push_back(w / residual);
  }
}

}  // namespace bgossip
