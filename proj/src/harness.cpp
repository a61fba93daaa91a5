#include "relpack/harness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "relpack/errors.hpp"
#include "relpack/level_curve.hpp"
#include "relpack/sampling.hpp"
#include "relpack/toric_chart.hpp"

namespace relpack {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

using Sets = std::vector<const MeasuredSamples*>;
using Field = double PointMetrics::*;

struct Extreme {
  double value;
  const ProductPoint* point = nullptr;
  std::size_t count = 0;
};

// First strict extreme in set order, then index order.
template <class Better>
Extreme extreme(const Sets& sets, Field field, double init, Better better) {
  Extreme out{init};
  for (const MeasuredSamples* set : sets) {
    for (std::size_t i = 0; i < set->metrics.size(); ++i) {
      const double v = set->metrics[i].*field;
      if (out.point == nullptr || better(v, out.value)) {
        out.value = v;
        out.point = &set->points[i];
      }
    }
    out.count += set->metrics.size();
  }
  return out;
}

Extreme largest(const Sets& sets, Field field) {
  return extreme(sets, field, 0.0, [](double a, double b) { return a > b; });
}

Extreme smallest(const Sets& sets, Field field) {
  return extreme(sets, field, kInf, [](double a, double b) { return a < b; });
}

CheckRecord record(std::string name, const Extreme& e, double margin,
                   bool passed, double tol) {
  CheckRecord r;
  r.name = std::move(name);
  r.passed = passed;
  r.worst_value = e.value;
  r.worst_margin = margin;
  r.tolerance = tol;
  r.samples = e.count;
  if (e.point != nullptr) r.worst_point = *e.point;
  return r;
}

// Pass iff worst < tol.
CheckRecord bounded_error(std::string name, const Extreme& e, double tol) {
  return record(std::move(name), e, tol - e.value, e.value < tol, tol);
}

// Pass iff worst slack > 0.
CheckRecord strict_slack(std::string name, const Extreme& e) {
  return record(std::move(name), e, e.value, e.value > 0.0, 0.0);
}

}  // namespace

const CheckRecord* VerificationReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

MeasuredSamples measure(const DiscMap& map, std::vector<ProductPoint> points,
                        KernelMode mode) {
  MeasuredSamples out;
  out.metrics = mode == KernelMode::Parallel
                    ? measure_points_parallel(map, points)
                    : measure_points_serial(map, points);
  out.points = std::move(points);
  return out;
}

std::vector<ProductPoint> sample_k_prime(int n, std::size_t count,
                                         std::uint64_t seed) {
  constexpr double kInset = 1e-3;
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32), 0x4b505249u};
  std::mt19937_64 rng(seq);
  std::uniform_real_distribution<double> angle(kInset, std::numbers::pi - kInset);
  std::exponential_distribution<double> spacing(1.0);
  std::vector<ProductPoint> out(count, ProductPoint(2 * static_cast<std::size_t>(n)));
  for (auto& x : out) {
    // Flat Dirichlet over n + 1 parts; drop the last to land in the simplex.
    std::vector<double> w(static_cast<std::size_t>(n) + 1);
    double total = 0.0;
    for (double& v : w) total += (v = spacing(rng));
    const double scale = 1.0 - (n + 1) * kInset;
    for (int k = 0; k < n; ++k) {
      x[2 * k] = angle(rng);
      x[2 * k + 1] = kInset + scale * w[k] / total;
    }
  }
  return out;
}

CheckRecord check_area_preservation(const MeasuredSamples& bulk, double tol) {
  return bounded_error("area_preservation",
                       largest({&bulk}, &PointMetrics::det_error), tol);
}

CheckRecord check_containment(const Sets& sets) {
  return strict_slack("containment",
                      smallest(sets, &PointMetrics::containment_slack));
}

CheckRecord check_band(const Sets& sets, double slack) {
  const Extreme e = smallest(sets, &PointMetrics::band_slack);
  return record("band", e, e.value + slack, e.value + slack >= 0.0, slack);
}

CheckRecord check_midline(const Sets& sets, double tol) {
  const Extreme e = largest(sets, &PointMetrics::midline_error);
  return record("midline", e, tol - e.value, e.value <= tol, tol);
}

CheckRecord check_roundtrip_inversion(const MeasuredSamples& bulk,
                                      double tol) {
  return bounded_error("roundtrip_inversion",
                       largest({&bulk}, &PointMetrics::roundtrip_error), tol);
}

CheckRecord check_chart_image(const Sets& sets) {
  return strict_slack("chart_image", smallest(sets, &PointMetrics::image_slack));
}

CheckRecord check_lagrangian_preimage(const MeasuredSamples& diameter,
                                      const MeasuredSamples& off_diameter,
                                      double tol) {
  const Extreme on = largest({&diameter}, &PointMetrics::clifford_distance);
  const Extreme off = smallest({&off_diameter}, &PointMetrics::clifford_distance);
  const Extreme flips = largest({&off_diameter}, &PointMetrics::midline_error);
  const bool passed = on.value < tol && off.value > 0.0 && std::isfinite(flips.value);
  Extreme worst = on;
  worst.count = on.count + off.count;
  double margin = std::min(tol - on.value, off.value);
  if (!std::isfinite(flips.value)) {
    worst = flips;
    worst.count = on.count + off.count;
    margin = -kInf;
  } else if (off.value <= 0.0) {
    worst.point = off.point;
  }
  return record("lagrangian_preimage", worst, margin, passed, tol);
}

CheckRecord check_curve_areas(const PackingParams& params, std::size_t count,
                              double tol) {
  const LevelCurveFamily family(params);
  const double top = std::numbers::pi * params.r_squared() * (1.0 - 1e-6);
  const double ratio = count > 1 ? std::pow(1e-8, 1.0 / (count - 1)) : 1.0;
  CheckRecord r;
  r.name = "curve_area";
  r.tolerance = tol;
  r.samples = count;
  double worst = 0.0;
  double area = top;
  for (std::size_t i = 0; i < count; ++i, area *= ratio) {
    double err = kInf;
    try {
      err = std::abs(enclosed_area(family, area) - area) / area;
    } catch (const Error&) {
    }
    if (i == 0 || err > worst) {
      worst = err;
      r.worst_point = {area};
    }
  }
  r.worst_value = worst;
  r.worst_margin = tol - worst;
  r.passed = worst < tol;
  return r;
}

CheckRecord check_chart_symplectic(const std::vector<ProductPoint>& points,
                                   double tol) {
  CheckRecord r;
  r.name = "chart_symplectic";
  r.tolerance = tol;
  r.samples = points.size();
  for (std::size_t i = 0; i < points.size(); ++i) {
    const double defect = chart_symplectic_check(points[i]);
    if (i == 0 || defect > r.worst_value) {
      r.worst_value = defect;
      r.worst_point = points[i];
    }
  }
  r.worst_margin = tol - r.worst_value;
  r.passed = r.worst_value < tol;
  return r;
}

CheckRecord check_moment_map(const std::vector<ProductPoint>& points,
                             double tol) {
  CheckRecord r;
  r.name = "moment_map";
  r.tolerance = tol;
  r.samples = points.size();
  for (std::size_t i = 0; i < points.size(); ++i) {
    const std::vector<double> mu = moment_map(chart_j(points[i]));
    double err = 0.0;
    for (std::size_t k = 0; k < mu.size(); ++k) {
      err = std::max(err, std::abs(mu[k] - points[i][2 * k + 1]));
    }
    if (i == 0 || err > r.worst_value) {
      r.worst_value = err;
      r.worst_point = points[i];
    }
  }
  r.worst_margin = tol - r.worst_value;
  r.passed = r.worst_value <= tol;
  return r;
}

CheckRecord check_sharpness_identity(const PackingParams& params, double tol) {
  const int n = params.n();
  const double r = params.r();
  const double sum =
      n * params.c() + 0.5 * r * r + n * default_epsilon(n, r);
  // The slack must vanish as r^2 approaches the bound.
  const double gap = 1e-9;
  const double near =
      default_epsilon(n, std::sqrt(radius_squared_bound(n) - gap));
  const bool vanishes = near > 0.0 && near < gap;

  CheckRecord out;
  out.name = "sharpness_identity";
  out.tolerance = tol;
  out.samples = 2;
  out.worst_value = std::abs(sum - 1.0);
  out.worst_margin = tol - out.worst_value;
  out.passed = out.worst_value <= tol && vanishes;
  out.worst_point = {static_cast<double>(n), r};
  return out;
}

VerificationReport run_all(const DiscMap& map, const HarnessConfig& config) {
  const PackingParams& params = map.params();
  auto draw = [&](SampleStrategy s, std::size_t count) {
    return count == 0 ? std::vector<ProductPoint>{}
                      : sample({s, count, config.seed}, params);
  };

  std::vector<ProductPoint> bulk_points =
      draw(SampleStrategy::UniformBall, config.uniform);
  std::vector<ProductPoint> rim = draw(SampleStrategy::BoundaryBiased, config.boundary);
  bulk_points.insert(bulk_points.end(), std::make_move_iterator(rim.begin()),
                     std::make_move_iterator(rim.end()));

  const MeasuredSamples bulk = measure(map, std::move(bulk_points), config.mode);
  const MeasuredSamples diameter =
      measure(map, draw(SampleStrategy::DiameterOnly, config.diameter), config.mode);
  const MeasuredSamples off =
      measure(map, draw(SampleStrategy::Midline, config.off_diameter), config.mode);
  const std::vector<ProductPoint> chart_points =
      sample_k_prime(params.n(), config.chart, config.seed);
  const Sets all{&bulk, &diameter, &off};
  const Tolerances& tol = config.tol;

  VerificationReport report;
  report.n = params.n();
  report.r = params.r();
  report.epsilon = params.epsilon();
  report.seed = config.seed;
  report.checks = {
      check_area_preservation(bulk, tol.determinant),
      check_containment(all),
      check_band(all, tol.exact),
      check_midline(all, tol.exact),
      check_roundtrip_inversion(bulk, tol.roundtrip),
      check_curve_areas(params, config.curve_areas, tol.curve_area),
      check_chart_symplectic(chart_points, tol.chart),
      check_moment_map(chart_points, tol.moment),
      check_chart_image(all),
      check_lagrangian_preimage(diameter, off, tol.exact),
      check_sharpness_identity(params, tol.sharpness),
  };
  report.overall = std::all_of(report.checks.begin(), report.checks.end(),
                               [](const CheckRecord& c) { return c.passed; });
  return report;
}

VerificationReport run_all(const PackingParams& params,
                           const HarnessConfig& config) {
  return run_all(SigmaMap(params), config);
}

nlohmann::json to_json(const VerificationReport& report) {
  nlohmann::json checks = nlohmann::json::array();
  for (const CheckRecord& c : report.checks) {
    checks.push_back({{"name", c.name},
                      {"passed", c.passed},
                      {"worst_margin", c.worst_margin},
                      {"worst_value", c.worst_value},
                      {"tolerance", c.tolerance},
                      {"samples", c.samples},
                      {"worst_point", c.worst_point}});
  }
  return {{"params",
           {{"n", report.n},
            {"r", report.r},
            {"epsilon", report.epsilon},
            {"seed", report.seed}}},
          {"checks", checks},
          {"overall", report.overall}};
}

}  // namespace relpack
