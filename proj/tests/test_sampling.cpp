#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include <omp.h>

#include "relpack/errors.hpp"
#include "relpack/sampling.hpp"
#include "support/oracles.hpp"

using namespace relpack;

namespace {

double squared_norm(const ProductPoint& x) {
  return std::inner_product(x.begin(), x.end(), x.begin(), 0.0);
}

const SampleStrategy kAll[] = {SampleStrategy::Grid, SampleStrategy::UniformBall,
                               SampleStrategy::BoundaryBiased, SampleStrategy::Midline,
                               SampleStrategy::DiameterOnly};

}  // namespace

TEST(Sampling, InsideOpenBall) {
  for (auto [n, r] : {std::pair{2, 0.8}, std::pair{3, 0.7}}) {
    const PackingParams params = make_params(n, r);
    for (SampleStrategy s : kAll) {
      const auto pts = sample({s, 5000, 1}, params);
      ASSERT_FALSE(pts.empty()) << to_string(s);
      for (const auto& x : pts) {
        ASSERT_EQ(x.size(), 2u * n);
        EXPECT_LT(squared_norm(x), params.r_squared() - 1e-14) << to_string(s);
      }
    }
  }
}

TEST(Sampling, Deterministic) {
  const PackingParams params = make_params(2, 0.8);
  for (SampleStrategy s : kAll) {
    EXPECT_EQ(sample({s, 10000, 42}, params), sample({s, 10000, 42}, params));
  }
  EXPECT_NE(sample({SampleStrategy::UniformBall, 100, 42}, params),
            sample({SampleStrategy::UniformBall, 100, 43}, params));
}

TEST(Sampling, IndependentOfThreadCount) {
  const PackingParams params = make_params(3, 0.7);
  const int saved = omp_get_max_threads();
  omp_set_num_threads(1);
  const auto one = sample({SampleStrategy::Midline, 20000, 9}, params);
  omp_set_num_threads(4);
  const auto four = sample({SampleStrategy::Midline, 20000, 9}, params);
  omp_set_num_threads(saved);
  EXPECT_EQ(one, four);
}

TEST(Sampling, DiameterOnly) {
  const PackingParams params = make_params(2, 0.8);
  const auto pts = sample({SampleStrategy::DiameterOnly, 10, 5}, params);
  ASSERT_EQ(pts.size(), 10u);
  for (const auto& x : pts) {
    EXPECT_EQ(x[1], 0.0);
    EXPECT_EQ(x[3], 0.0);
    EXPECT_LT(x[0] * x[0] + x[2] * x[2], 0.64);
  }
}

TEST(Sampling, BoundaryBiasedHugsTheRim) {
  const PackingParams params = make_params(2, 0.8);
  for (const auto& x : sample({SampleStrategy::BoundaryBiased, 5000, 3}, params)) {
    EXPECT_GT(squared_norm(x), 0.99 * params.r_squared());
  }
}

TEST(Sampling, MidlineHasSmallNonzeroAction) {
  const PackingParams params = make_params(2, 0.8);
  for (const auto& x : sample({SampleStrategy::Midline, 5000, 3}, params)) {
    bool some = false;
    for (int k = 0; k < 2; ++k) {
      const double p = std::abs(x[2 * k + 1]);
      EXPECT_TRUE(p == 0.0 || (p >= 1e-6 && p <= 1e-2)) << p;
      some |= p > 1e-6;
    }
    EXPECT_TRUE(some);
  }
}

TEST(Sampling, GridCoversTheFirstDisc) {
  const PackingParams params = make_params(2, 0.8);
  const auto pts = sample({SampleStrategy::Grid, 10000, 0}, params);
  // Cells inside the disc: about pi/4 of the square.
  EXPECT_NEAR(double(pts.size()) / 10000, std::numbers::pi / 4, 0.02);
  for (const auto& x : pts) {
    EXPECT_EQ(x[2], 0.0);
    EXPECT_EQ(x[3], 0.0);
  }
}

// Mean of sum u_k for the uniform ball, against the radial-density oracle.
TEST(Sampling, UniformBallMoment) {
  for (const auto& row : fixtures::frozen()["ball_moments"]) {
    const PackingParams params = make_params(row["n"], row["r"]);
    const auto pts = sample({SampleStrategy::UniformBall, 100000, 42}, params);
    double sum = 0.0;
    for (const auto& x : pts) sum += squared_norm(x);
    const double mean = sum / pts.size();
    const double se = std::sqrt(row["var_u"].get<double>() / pts.size());
    const double expected = row["mean_u"];
    const int n = row["n"];
    EXPECT_NEAR(expected, params.r_squared() * 2 * n / (2 * n + 2), 1e-15);
    EXPECT_NEAR(mean, expected, 3 * se);
  }
}

TEST(Sampling, ZeroCountRejected) {
  EXPECT_THROW(sample({SampleStrategy::UniformBall, 0, 1}, make_params(2, 0.8)), Error);
}

TEST(Sampling, StrategyNames) {
  EXPECT_EQ(to_string(SampleStrategy::Grid), "grid");
  EXPECT_EQ(to_string(SampleStrategy::UniformBall), "uniform-ball");
  EXPECT_EQ(to_string(SampleStrategy::BoundaryBiased), "boundary-biased");
  EXPECT_EQ(to_string(SampleStrategy::Midline), "midline");
  EXPECT_EQ(to_string(SampleStrategy::DiameterOnly), "diameter-only");
}
