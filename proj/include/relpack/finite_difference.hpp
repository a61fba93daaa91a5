#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "relpack/types.hpp"

namespace relpack {

inline constexpr double kFiniteDifferenceStep = 1e-5;

namespace detail {
// Eighth-order central weights for offsets +-1..+-4 (antisymmetric).
inline constexpr std::array<double, 4> kCentralWeights{
    4.0 / 5.0, -1.0 / 5.0, 4.0 / 105.0, -1.0 / 280.0};
}  // namespace detail

/// Jacobian of a planar map f: DiscPoint -> ChartPoint by central
/// differences with the given step.
template <class F>
Mat2 central_jacobian(F&& f, const DiscPoint& x,
                      double step = kFiniteDifferenceStep) {
  Mat2 jac;
  for (int j = 0; j < 2; ++j) {
    auto shifted = [&](double k) {
      DiscPoint y = x;
      (j == 0 ? y.q : y.p) += k * step;
      return f(y);
    };
    double dq = 0.0;
    double dp = 0.0;
    for (int k = 1; k <= 4; ++k) {
      const ChartPoint plus = shifted(k);
      const ChartPoint minus = shifted(-k);
      dq += detail::kCentralWeights[k - 1] * (plus.Q - minus.Q);
      dp += detail::kCentralWeights[k - 1] * (plus.P - minus.P);
    }
    jac(0, j) = dq / step;
    jac(1, j) = dp / step;
  }
  return jac;
}

/// Row-major out_dim x x.size() Jacobian of f: R^d -> R^out_dim.
template <class F>
std::vector<double> central_jacobian(F&& f, const std::vector<double>& x,
                                     std::size_t out_dim,
                                     double step = kFiniteDifferenceStep) {
  const std::size_t d = x.size();
  std::vector<double> jac(out_dim * d);
  std::vector<double> y = x;
  for (std::size_t j = 0; j < d; ++j) {
    auto at = [&](double k) {
      y[j] = x[j] + k * step;
      return f(y);
    };
    for (int k = 1; k <= 4; ++k) {
      const auto plus = at(k);
      const auto minus = at(-k);
      for (std::size_t i = 0; i < out_dim; ++i) {
        jac[i * d + j] += detail::kCentralWeights[k - 1] * (plus[i] - minus[i]);
      }
    }
    y[j] = x[j];
    for (std::size_t i = 0; i < out_dim; ++i) jac[i * d + j] /= step;
  }
  return jac;
}

}  // namespace relpack
