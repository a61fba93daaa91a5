#pragma once

#include <array>
#include <complex>
#include <vector>

namespace relpack {

/// Source point of the disc map, coordinates (q, p).
struct DiscPoint {
  double q = 0.0;
  double p = 0.0;

  double squared_radius() const { return q * q + p * p; }
};

/// Target point of the disc map, coordinates (Q, P).
struct ChartPoint {
  double Q = 0.0;
  double P = 0.0;
};

/// Row-major 2x2 matrix.
struct Mat2 {
  std::array<double, 4> m{};

  double operator()(int i, int j) const { return m[2 * i + j]; }
  double& operator()(int i, int j) { return m[2 * i + j]; }
  double det() const { return m[0] * m[3] - m[1] * m[2]; }
};

/// Interleaved (q1, p1, ..., qn, pn). Used both for points of B^{2n}(r) and
/// for action-angle points (Q1, P1, ..., Qn, Pn) of K'.
using ProductPoint = std::vector<double>;

/// Point of the affine ball chart C^n of CP^n \ CP^{n-1}.
using ComplexChartPoint = std::vector<std::complex<double>>;

inline DiscPoint factor(const ProductPoint& x, std::size_t k) {
  return {x[2 * k], x[2 * k + 1]};
}

}  // namespace relpack
