#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

#include "relpack/errors.hpp"
#include "relpack/kernels.hpp"

namespace relpack {
namespace {

int sign(double v) { return (v > 0.0) - (v < 0.0); }

}  // namespace

PointMetrics measure_point(const DiscMap& map, const ProductPoint& x) {
  constexpr double kInf = std::numeric_limits<double>::infinity();
  const PackingParams& params = map.params();
  const double c = params.c();
  const double eps = params.epsilon();

  PointMetrics out;
  out.containment_slack = kInf;
  out.band_slack = kInf;
  double sum_p = 0.0;
  double sum_z = 0.0;
  for (std::size_t k = 0; k < x.size() / 2; ++k) {
    const DiscPoint z = factor(x, k);
    const ChartPoint w = map.evaluate(z);

    out.det_error = std::max(out.det_error, std::abs(map.derivative(z).det() - 1.0));

    const double half_u = 0.5 * z.squared_radius();
    out.band_slack = std::min({out.band_slack, (c + half_u + eps) - w.P,
                               w.P - (c - half_u - eps)});
    out.containment_slack = std::min(
        {out.containment_slack, w.Q, std::numbers::pi - w.Q, w.P});
    sum_p += w.P;

    try {
      const DiscPoint back = map.invert(w);
      out.roundtrip_error = std::max(
          {out.roundtrip_error, std::abs(back.q - z.q), std::abs(back.p - z.p)});
    } catch (const Error&) {
      out.roundtrip_error = kInf;
    }

    if (z.p == 0.0) {
      out.midline_error = std::max(out.midline_error, std::abs(w.P - c));
    } else if (sign(w.P - c) != sign(z.p)) {
      out.midline_error = kInf;
    }

    // Chart image without the K' precondition, so broken maps still
    // produce metrics.
    const double modulus2 = std::norm(
        std::polar(std::sqrt(std::max(w.P, 0.0)), 2.0 * w.Q));
    sum_z += modulus2;
    out.clifford_distance = std::max(out.clifford_distance, std::abs(modulus2 - c));
  }
  out.containment_slack = std::min(out.containment_slack, 1.0 - sum_p);
  out.image_slack = 1.0 - sum_z;
  return out;
}

std::vector<PointMetrics> measure_points_serial(
    const DiscMap& map, const std::vector<ProductPoint>& points) {
  std::vector<PointMetrics> out(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    out[i] = measure_point(map, points[i]);
  }
  return out;
}

}  // namespace relpack
