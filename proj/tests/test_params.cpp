#include <gtest/gtest.h>

#include <cmath>

#include "relpack/errors.hpp"
#include "relpack/params.hpp"
#include "support/oracles.hpp"

using namespace relpack;

namespace {

ErrorCode code_of(int n, double r, std::optional<double> eps = std::nullopt) {
  try {
    make_params(n, r, eps);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error for n=" << n << " r=" << r;
  return ErrorCode::PreconditionViolated;
}

}  // namespace

TEST(Params, MatchFrozenEpsilon) {
  for (const auto& row : fixtures::frozen()["params"]) {
    const PackingParams p = make_params(row["n"], row["r"]);
    EXPECT_DOUBLE_EQ(p.c(), row["c"].get<double>());
    EXPECT_NEAR(p.epsilon(), row["epsilon"].get<double>(), 1e-16);
    EXPECT_EQ(p.epsilon(), p.max_epsilon());
  }
}

TEST(Params, SharpnessIdentityHoldsTo1e15) {
  for (const auto& row : fixtures::frozen()["params"]) {
    const int n = row["n"];
    const double r = row["r"];
    const PackingParams p = make_params(n, r);
    EXPECT_LE(std::abs(n * p.c() + 0.5 * r * r + n * p.epsilon() - 1.0), 1e-15)
        << "n=" << n << " r=" << r;
  }
}

TEST(Params, SlackVanishesNearBound) {
  for (const auto& row : fixtures::frozen()["near_bound"]) {
    const double eps = default_epsilon(row["n"], row["r"]);
    EXPECT_GT(eps, 0.0);
    EXPECT_NEAR(eps, row["epsilon"].get<double>(), 1e-15);
  }
}

TEST(Params, RadiusAtBoundRejected) {
  EXPECT_EQ(code_of(2, std::sqrt(2.0 / 3.0)), ErrorCode::RadiusAtOrAboveBound);
  EXPECT_EQ(code_of(2, 0.8165), ErrorCode::RadiusAtOrAboveBound);
  EXPECT_EQ(code_of(3, std::sqrt(0.5)), ErrorCode::RadiusAtOrAboveBound);
  EXPECT_NO_THROW(make_params(2, 0.81));
}

TEST(Params, BoundMessageNamesTheBound) {
  try {
    make_params(2, 0.8165);
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("radius at or above Biran–Cornea bound"),
              std::string::npos);
  }
}

TEST(Params, EpsilonRange) {
  EXPECT_EQ(code_of(2, 0.8, 0.0), ErrorCode::InvalidEpsilon);
  EXPECT_EQ(code_of(2, 0.8, -1e-3), ErrorCode::InvalidEpsilon);
  EXPECT_EQ(code_of(2, 0.8, 0.0067), ErrorCode::InvalidEpsilon);
  EXPECT_EQ(make_params(2, 0.8, 0.005).epsilon(), 0.005);
}

TEST(Params, DimensionAndRadius) {
  EXPECT_EQ(code_of(1, 0.5), ErrorCode::InvalidDimension);
  EXPECT_EQ(code_of(2, 0.0), ErrorCode::InvalidDimension);
  EXPECT_EQ(code_of(2, -0.3), ErrorCode::InvalidDimension);
  EXPECT_EQ(code_of(2, std::nan("")), ErrorCode::InvalidDimension);
}
