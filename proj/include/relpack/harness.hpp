#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "relpack/kernels.hpp"
#include "relpack/params.hpp"
#include "relpack/sigma.hpp"

namespace relpack {

struct Tolerances {
  double determinant = 1e-6;
  double exact = 1e-12;  // band rounding slack, midline, Lagrangian
  double roundtrip = 1e-9;
  double curve_area = 1e-6;
  double chart = 1e-6;
  double moment = 1e-15;
  double sharpness = 1e-15;
};

enum class KernelMode { Serial, Parallel };

struct HarnessConfig {
  std::uint64_t seed = 42;
  std::size_t uniform = 100000;
  std::size_t boundary = 10000;
  std::size_t diameter = 1000;
  std::size_t off_diameter = 1000;
  std::size_t chart = 1000;
  std::size_t curve_areas = 32;
  KernelMode mode = KernelMode::Parallel;
  Tolerances tol;
};

/// One check. worst_value is the raw extreme (max error or min slack);
/// worst_margin is its signed distance from the pass threshold, >= 0 on
/// pass (> 0 where the constraint is strict).
struct CheckRecord {
  std::string name;
  bool passed = false;
  double worst_value = 0.0;
  double worst_margin = 0.0;
  double tolerance = 0.0;
  std::size_t samples = 0;
  std::vector<double> worst_point;
};

struct VerificationReport {
  int n = 0;
  double r = 0.0;
  double epsilon = 0.0;
  std::uint64_t seed = 0;
  std::vector<CheckRecord> checks;
  bool overall = false;

  /// nullptr if no check has that name.
  const CheckRecord* find(const std::string& name) const;
};

struct MeasuredSamples {
  std::vector<ProductPoint> points;
  std::vector<PointMetrics> metrics;
};

MeasuredSamples measure(const DiscMap& map, std::vector<ProductPoint> points,
                        KernelMode mode);

/// Interior points of K' = (0, pi)^n x simplex, every coordinate at least
/// 1e-3 from the boundary.
std::vector<ProductPoint> sample_k_prime(int n, std::size_t count,
                                         std::uint64_t seed);

CheckRecord check_area_preservation(const MeasuredSamples& bulk, double tol);
CheckRecord check_containment(const std::vector<const MeasuredSamples*>& sets);
CheckRecord check_band(const std::vector<const MeasuredSamples*>& sets,
                       double slack);
CheckRecord check_midline(const std::vector<const MeasuredSamples*>& sets,
                          double tol);
CheckRecord check_roundtrip_inversion(const MeasuredSamples& bulk, double tol);
CheckRecord check_chart_image(const std::vector<const MeasuredSamples*>& sets);
CheckRecord check_lagrangian_preimage(const MeasuredSamples& diameter,
                                      const MeasuredSamples& off_diameter,
                                      double tol);
CheckRecord check_curve_areas(const PackingParams& params, std::size_t count,
                              double tol);
CheckRecord check_chart_symplectic(const std::vector<ProductPoint>& points,
                                   double tol);
CheckRecord check_moment_map(const std::vector<ProductPoint>& points,
                             double tol);
CheckRecord check_sharpness_identity(const PackingParams& params, double tol);

/// Runs every check against map (normally SigmaMap; tests pass broken
/// fixtures). Failures are recorded, never thrown.
VerificationReport run_all(const DiscMap& map, const HarnessConfig& config);
VerificationReport run_all(const PackingParams& params,
                           const HarnessConfig& config);

/// Stable-key JSON form:
/// {"params": {n, r, epsilon, seed},
///  "checks": [{name, passed, worst_margin, worst_value, tolerance,
///              samples, worst_point}],
///  "overall"}.
nlohmann::json to_json(const VerificationReport& report);

}  // namespace relpack
