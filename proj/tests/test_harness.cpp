#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <set>

#include "fixtures/broken_sigma.hpp"
#include "relpack/harness.hpp"
#include "relpack/sampling.hpp"
#include "relpack/toric_chart.hpp"

using namespace relpack;

namespace {

HarnessConfig small_config(std::uint64_t seed = 42) {
  HarnessConfig config;
  config.seed = seed;
  config.uniform = 4000;
  config.boundary = 1000;
  config.diameter = 300;
  config.off_diameter = 300;
  config.chart = 300;
  config.curve_areas = 32;
  return config;
}

MeasuredSamples one_point(const ProductPoint& x, PointMetrics m) {
  return {{x}, {m}};
}

std::set<std::string> failing(const VerificationReport& report) {
  std::set<std::string> out;
  for (const auto& c : report.checks) {
    if (!c.passed) out.insert(c.name);
  }
  return out;
}

}  // namespace

TEST(Kernels, SerialAndParallelAgreeBitwise) {
  const PackingParams params = make_params(3, 0.7);
  const SigmaMap map(params);
  const auto pts = sample({SampleStrategy::UniformBall, 3000, 8}, params);
  const auto a = measure_points_serial(map, pts);
  const auto b = measure_points_parallel(map, pts);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].det_error, b[i].det_error);
    EXPECT_EQ(a[i].containment_slack, b[i].containment_slack);
    EXPECT_EQ(a[i].band_slack, b[i].band_slack);
    EXPECT_EQ(a[i].roundtrip_error, b[i].roundtrip_error);
    EXPECT_EQ(a[i].image_slack, b[i].image_slack);
    EXPECT_EQ(a[i].midline_error, b[i].midline_error);
    EXPECT_EQ(a[i].clifford_distance, b[i].clifford_distance);
  }
}

TEST(Kernels, CentreMetrics) {
  const PackingParams params = make_params(2, 0.8);
  const PointMetrics m = measure_point(SigmaMap(params), {0, 0, 0, 0});
  EXPECT_EQ(m.det_error, 0.0);
  EXPECT_NEAR(m.containment_slack, 1.0 / 3, 1e-15);
  EXPECT_NEAR(m.band_slack, params.epsilon(), 1e-16);
  EXPECT_EQ(m.roundtrip_error, 0.0);
  EXPECT_EQ(m.midline_error, 0.0);
  EXPECT_LT(m.clifford_distance, 1e-15);
}

TEST(RunAll, SmallBudgetPasses) {
  for (auto [n, r] : {std::pair{2, 0.8}, std::pair{2, 0.81}, std::pair{3, 0.7}}) {
    const VerificationReport report = run_all(make_params(n, r), small_config());
    EXPECT_TRUE(report.overall) << "n=" << n << " r=" << r << "\n"
                                << to_json(report).dump(1);
    EXPECT_EQ(report.checks.size(), 11u);
  }
}

TEST(RunAll, ReportsAreReproducible) {
  const PackingParams params = make_params(2, 0.8);
  HarnessConfig config = small_config(7);
  const std::string first = to_json(run_all(params, config)).dump();
  const std::string second = to_json(run_all(params, config)).dump();
  EXPECT_EQ(first, second);
  config.mode = KernelMode::Serial;
  EXPECT_EQ(to_json(run_all(params, config)).dump(), first);
}

TEST(RunAll, OutcomeIndependentOfOrder) {
  const PackingParams params = make_params(2, 0.8);
  const SigmaMap map(params);
  auto pts = sample({SampleStrategy::UniformBall, 2000, 4}, params);
  const MeasuredSamples forward = measure(map, pts, KernelMode::Parallel);
  std::shuffle(pts.begin(), pts.end(), std::mt19937_64(1));
  const MeasuredSamples shuffled = measure(map, pts, KernelMode::Parallel);
  const CheckRecord a = check_area_preservation(forward, 1e-6);
  const CheckRecord b = check_area_preservation(shuffled, 1e-6);
  // Ties at rounding level may pick a different worst point; the extreme
  // value and the verdict may not change.
  EXPECT_EQ(a.worst_value, b.worst_value);
  EXPECT_EQ(a.passed, b.passed);
  const CheckRecord c = check_containment({&forward});
  const CheckRecord d = check_containment({&shuffled});
  EXPECT_EQ(c.worst_value, d.worst_value);
  EXPECT_EQ(c.passed, d.passed);
}

// The stretched map breaks only the Jacobian determinant.
TEST(RunAll, BrokenSigmaFailsOnlyAreaPreservation) {
  const PackingParams params = make_params(2, 0.8);
  const fixtures::BrokenSigma broken(params);
  const VerificationReport report = run_all(broken, small_config());
  EXPECT_FALSE(report.overall);
  EXPECT_EQ(failing(report), std::set<std::string>{"area_preservation"});
  EXPECT_NEAR(report.find("area_preservation")->worst_value, 0.01, 1e-9);
}

TEST(Checks, ContainmentAtCentre) {
  const PackingParams params = make_params(2, 0.8);
  const SigmaMap map(params);
  const MeasuredSamples centre = measure(map, {{0, 0, 0, 0}}, KernelMode::Serial);
  const CheckRecord c = check_containment({&centre});
  EXPECT_TRUE(c.passed);
  EXPECT_NEAR(c.worst_value, 1.0 / 3, 1e-15);
}

TEST(Checks, EachCheckCanFail) {
  const ProductPoint x{0.1, 0.1, 0.1, 0.1};
  const double inf = std::numeric_limits<double>::infinity();

  PointMetrics m;
  m.det_error = 2e-6;
  EXPECT_FALSE(check_area_preservation(one_point(x, m), 1e-6).passed);
  EXPECT_TRUE(check_area_preservation(one_point(x, PointMetrics{}), 1e-6).passed);

  m = {};
  m.containment_slack = 0.0;
  m.band_slack = 1.0;
  m.image_slack = 1.0;
  auto s = one_point(x, m);
  EXPECT_FALSE(check_containment({&s}).passed);

  m.containment_slack = 1.0;
  m.band_slack = -2e-12;
  s = one_point(x, m);
  EXPECT_FALSE(check_band({&s}, 1e-12).passed);
  m.band_slack = -0.5e-12;
  s = one_point(x, m);
  EXPECT_TRUE(check_band({&s}, 1e-12).passed);

  m.midline_error = inf;
  s = one_point(x, m);
  EXPECT_FALSE(check_midline({&s}, 1e-12).passed);

  m = {};
  m.roundtrip_error = inf;
  EXPECT_FALSE(check_roundtrip_inversion(one_point(x, m), 1e-9).passed);

  m = {};
  m.image_slack = -1e-3;
  s = one_point(x, m);
  EXPECT_FALSE(check_chart_image({&s}).passed);
}

TEST(Checks, LagrangianPreimage) {
  const PackingParams params = make_params(2, 0.8);
  const SigmaMap map(params);
  const MeasuredSamples on = measure(map, {{0.3, 0.0, -0.2, 0.0}}, KernelMode::Serial);
  const MeasuredSamples up = measure(map, {{0.3, 1e-6, -0.2, 0.0}}, KernelMode::Serial);
  const MeasuredSamples down = measure(map, {{0.3, -1e-6, -0.2, 0.0}}, KernelMode::Serial);
  EXPECT_TRUE(check_lagrangian_preimage(on, up, 1e-12).passed);
  EXPECT_TRUE(check_lagrangian_preimage(on, down, 1e-12).passed);
  // Swapping the roles: an on-diameter point among off-diameter samples
  // has zero distance and must fail.
  EXPECT_FALSE(check_lagrangian_preimage(up, on, 1e-12).passed);
}

TEST(Checks, SharpnessIdentity) {
  for (auto [n, r] : {std::pair{2, 0.8}, std::pair{2, 0.81}, std::pair{3, 0.7},
                      std::pair{4, 0.6}}) {
    const CheckRecord c = check_sharpness_identity(make_params(n, r), 1e-15);
    EXPECT_TRUE(c.passed) << n << " " << r;
    EXPECT_LE(c.worst_value, 1e-15);
  }
}

TEST(Checks, CurveAreasAndChart) {
  const PackingParams params = make_params(4, 0.6);
  const CheckRecord areas = check_curve_areas(params, 32, 1e-6);
  EXPECT_TRUE(areas.passed);
  EXPECT_EQ(areas.samples, 32u);
  const auto kp = sample_k_prime(4, 500, 3);
  EXPECT_TRUE(check_chart_symplectic(kp, 1e-6).passed);
  EXPECT_TRUE(check_moment_map(kp, 1e-15).passed);
  const DomainSpec domain(4);
  for (const auto& x : kp) EXPECT_TRUE(domain.in_k_prime(x));
}

TEST(Json, SchemaAndPrecision) {
  const VerificationReport report = run_all(make_params(2, 0.8), small_config());
  const nlohmann::json j = to_json(report);
  ASSERT_TRUE(j.contains("params"));
  for (const char* key : {"n", "r", "epsilon", "seed"}) EXPECT_TRUE(j["params"].contains(key));
  EXPECT_EQ(j["params"]["n"], 2);
  EXPECT_EQ(j["params"]["seed"], 42);
  ASSERT_TRUE(j["checks"].is_array());
  std::vector<std::string> names;
  for (const auto& c : j["checks"]) {
    for (const char* key : {"name", "passed", "worst_margin", "tolerance", "samples"}) {
      EXPECT_TRUE(c.contains(key)) << key;
    }
    names.push_back(c["name"]);
  }
  EXPECT_EQ(names, (std::vector<std::string>{
                       "area_preservation", "containment", "band", "midline",
                       "roundtrip_inversion", "curve_area", "chart_symplectic",
                       "moment_map", "chart_image", "lagrangian_preimage",
                       "sharpness_identity"}));
  EXPECT_TRUE(j["overall"].get<bool>());
  // Text form keeps every double exactly.
  const nlohmann::json back = nlohmann::json::parse(j.dump());
  EXPECT_EQ(back["params"]["epsilon"].get<double>(), report.epsilon);
  for (std::size_t i = 0; i < report.checks.size(); ++i) {
    EXPECT_EQ(back["checks"][i]["worst_margin"].get<double>(), report.checks[i].worst_margin);
  }
}
