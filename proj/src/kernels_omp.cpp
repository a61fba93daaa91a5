#include "relpack/kernels.hpp"

namespace relpack {

std::vector<PointMetrics> measure_points_parallel(
    const DiscMap& map, const std::vector<ProductPoint>& points) {
  std::vector<PointMetrics> out(points.size());
  const auto count = static_cast<std::ptrdiff_t>(points.size());
  // Cost per point varies with the radius (inversion iterations).
#pragma omp parallel for schedule(dynamic, 64)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    out[i] = measure_point(map, points[i]);
  }
  return out;
}

}  // namespace relpack
