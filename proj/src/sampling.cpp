#include "relpack/sampling.hpp"

#include <cmath>
#include <random>

#include "relpack/errors.hpp"

namespace relpack {
namespace {

constexpr std::size_t kChunk = 4096;
constexpr double kRimExclusion = 1e-12;

using Engine = std::mt19937_64;

Engine chunk_engine(std::uint64_t seed, std::size_t chunk,
                    SampleStrategy strategy) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(chunk),
                    static_cast<std::uint32_t>(strategy)};
  return Engine(seq);
}

// Uniform direction on the unit sphere in R^d, scaled to length radius.
std::vector<double> on_sphere(Engine& rng, std::size_t d, double radius) {
  std::normal_distribution<double> normal;
  std::vector<double> v(d);
  double norm2 = 0.0;
  do {
    norm2 = 0.0;
    for (double& x : v) {
      x = normal(rng);
      norm2 += x * x;
    }
  } while (norm2 == 0.0);
  const double scale = radius / std::sqrt(norm2);
  for (double& x : v) x *= scale;
  return v;
}

double squared_norm(const ProductPoint& x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return s;
}

ProductPoint uniform_ball(Engine& rng, const PackingParams& params) {
  const std::size_t d = 2 * static_cast<std::size_t>(params.n());
  std::uniform_real_distribution<double> unit;
  for (;;) {
    const double radius =
        params.r() * std::pow(unit(rng), 1.0 / static_cast<double>(d));
    ProductPoint x = on_sphere(rng, d, radius);
    if (squared_norm(x) < params.r_squared() - kRimExclusion) return x;
  }
}

ProductPoint boundary_biased(Engine& rng, const PackingParams& params) {
  const std::size_t d = 2 * static_cast<std::size_t>(params.n());
  const double r2 = params.r_squared();
  std::uniform_real_distribution<double> shell(0.99 * r2, r2 - kRimExclusion);
  for (;;) {
    ProductPoint x = on_sphere(rng, d, std::sqrt(shell(rng)));
    if (squared_norm(x) < r2 - kRimExclusion) return x;
  }
}

// q-part uniform in the real n-ball of the given radius, p = 0.
ProductPoint real_ball(Engine& rng, int n, double radius) {
  std::uniform_real_distribution<double> unit;
  const double rho = radius * std::pow(unit(rng), 1.0 / n);
  const std::vector<double> q = on_sphere(rng, static_cast<std::size_t>(n), rho);
  ProductPoint x(2 * q.size(), 0.0);
  for (std::size_t k = 0; k < q.size(); ++k) x[2 * k] = q[k];
  return x;
}

ProductPoint diameter(Engine& rng, const PackingParams& params) {
  for (;;) {
    ProductPoint x = real_ball(rng, params.n(), params.r());
    if (squared_norm(x) < params.r_squared() - kRimExclusion) return x;
  }
}

ProductPoint midline(Engine& rng, const PackingParams& params) {
  const int n = params.n();
  std::uniform_real_distribution<double> unit;
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<double> p(static_cast<std::size_t>(n), 0.0);
  const int forced = pick(rng);
  double p2 = 0.0;
  for (int k = 0; k < n; ++k) {
    // Each factor is off the diameter with probability 3/4; one always is.
    if (k != forced && unit(rng) < 0.25) continue;
    const double magnitude = std::pow(10.0, -6.0 + 4.0 * unit(rng));
    p[k] = unit(rng) < 0.5 ? -magnitude : magnitude;
    p2 += p[k] * p[k];
  }
  for (;;) {
    ProductPoint x =
        real_ball(rng, n, std::sqrt(params.r_squared() - p2 - kRimExclusion));
    for (int k = 0; k < n; ++k) x[2 * k + 1] = p[k];
    if (squared_norm(x) < params.r_squared() - kRimExclusion) return x;
  }
}

std::vector<ProductPoint> grid(std::size_t count, const PackingParams& params) {
  const auto side = static_cast<std::size_t>(std::sqrt(static_cast<double>(count)));
  const double r = params.r();
  const double step = 2.0 * r / static_cast<double>(side);
  std::vector<ProductPoint> out;
  for (std::size_t i = 0; i < side; ++i) {
    for (std::size_t j = 0; j < side; ++j) {
      ProductPoint x(2 * static_cast<std::size_t>(params.n()), 0.0);
      x[0] = -r + (static_cast<double>(i) + 0.5) * step;
      x[1] = -r + (static_cast<double>(j) + 0.5) * step;
      if (squared_norm(x) < params.r_squared() - kRimExclusion) {
        out.push_back(std::move(x));
      }
    }
  }
  return out;
}

}  // namespace

std::string_view to_string(SampleStrategy strategy) {
  switch (strategy) {
    case SampleStrategy::Grid: return "grid";
    case SampleStrategy::UniformBall: return "uniform-ball";
    case SampleStrategy::BoundaryBiased: return "boundary-biased";
    case SampleStrategy::Midline: return "midline";
    case SampleStrategy::DiameterOnly: return "diameter-only";
  }
  return "unknown";
}

std::vector<ProductPoint> sample(const SampleSpec& spec,
                                 const PackingParams& params) {
  if (spec.count == 0) {
    throw Error(ErrorCode::PreconditionViolated, "sample count must be > 0");
  }
  if (spec.strategy == SampleStrategy::Grid) return grid(spec.count, params);

  std::vector<ProductPoint> out(spec.count);
  const std::size_t chunks = (spec.count + kChunk - 1) / kChunk;
#pragma omp parallel for schedule(static)
  for (std::size_t chunk = 0; chunk < chunks; ++chunk) {
    Engine rng = chunk_engine(spec.seed, chunk, spec.strategy);
    const std::size_t end = std::min(spec.count, (chunk + 1) * kChunk);
    for (std::size_t i = chunk * kChunk; i < end; ++i) {
      switch (spec.strategy) {
        case SampleStrategy::UniformBall: out[i] = uniform_ball(rng, params); break;
        case SampleStrategy::BoundaryBiased: out[i] = boundary_biased(rng, params); break;
        case SampleStrategy::Midline: out[i] = midline(rng, params); break;
        case SampleStrategy::DiameterOnly: out[i] = diameter(rng, params); break;
        case SampleStrategy::Grid: break;
      }
    }
  }
  return out;
}

}  // namespace relpack
