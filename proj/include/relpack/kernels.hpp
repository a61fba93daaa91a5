#pragma once

#include <vector>

#include "relpack/sigma.hpp"
#include "relpack/types.hpp"

namespace relpack {

/// Everything the harness needs to know about one sample of B^{2n}(r),
/// computed in a single pass so each factor is mapped once.
struct PointMetrics {
  double det_error = 0.0;          // max_k |det d sigma(z_k) - 1|
  double containment_slack = 0.0;  // min(Q_k, pi - Q_k, P_k, 1 - sum P)
  double band_slack = 0.0;         // min_k distance inside c +- (u_k/2 + eps)
  double roundtrip_error = 0.0;    // max_k, coordinate-wise; inf if not invertible
  double image_slack = 0.0;        // 1 - sum |z_k|^2 after the chart
  double midline_error = 0.0;      // |P_k - c| where p_k == 0; inf on a sign flip
  double clifford_distance = 0.0;  // max_k | |z_k|^2 - c |
};

PointMetrics measure_point(const DiscMap& map, const ProductPoint& x);

/// Reference loop.
std::vector<PointMetrics> measure_points_serial(
    const DiscMap& map, const std::vector<ProductPoint>& points);

/// OpenMP loop. Each index is written by exactly one thread, so the
/// result is identical to measure_points_serial.
std::vector<PointMetrics> measure_points_parallel(
    const DiscMap& map, const std::vector<ProductPoint>& points);

}  // namespace relpack
