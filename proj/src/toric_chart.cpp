#include "relpack/toric_chart.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "relpack/errors.hpp"
#include "relpack/finite_difference.hpp"

namespace relpack {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kAngleClearance = 1e-6;

std::size_t factors(const ProductPoint& x) { return x.size() / 2; }

std::vector<double> chart_coordinates(const ProductPoint& x) {
  std::vector<double> out(x.size());
  for (std::size_t k = 0; k < factors(x); ++k) {
    const double radius = std::sqrt(x[2 * k + 1]);
    out[2 * k] = radius * std::cos(2.0 * x[2 * k]);
    out[2 * k + 1] = radius * std::sin(2.0 * x[2 * k]);
  }
  return out;
}

}  // namespace

bool DomainSpec::in_square(const ProductPoint& x) const {
  if (!has_size(x)) return false;
  for (std::size_t k = 0; k < factors(x); ++k) {
    if (!(x[2 * k] > 0.0 && x[2 * k] < kPi)) return false;
  }
  return true;
}

bool DomainSpec::in_simplex(const ProductPoint& x) const {
  if (!has_size(x)) return false;
  double sum = 0.0;
  for (std::size_t k = 0; k < factors(x); ++k) {
    if (!(x[2 * k + 1] > 0.0)) return false;
    sum += x[2 * k + 1];
  }
  return sum < 1.0;
}

bool DomainSpec::in_k_prime(const ProductPoint& x) const {
  return in_square(x) && in_simplex(x);
}

bool DomainSpec::on_l_prime(const ProductPoint& x, double tol) const {
  if (!in_k_prime(x)) return false;
  for (std::size_t k = 0; k < factors(x); ++k) {
    if (!(std::abs(x[2 * k + 1] - clifford_level()) <= tol)) return false;
  }
  return true;
}

bool DomainSpec::in_real_slice(const ProductPoint& x) const {
  if (!has_size(x)) return false;
  for (std::size_t k = 0; k < factors(x); ++k) {
    if (x[2 * k + 1] != 0.0) return false;
  }
  return true;
}

std::vector<double> moment_map(const ComplexChartPoint& z) {
  std::vector<double> out(z.size());
  std::transform(z.begin(), z.end(), out.begin(),
                 [](std::complex<double> w) { return std::norm(w); });
  return out;
}

ComplexChartPoint chart_j(const ProductPoint& x) {
  const DomainSpec domain(static_cast<int>(factors(x)));
  if (x.size() % 2 != 0 || !domain.in_k_prime(x)) {
    throw Error(ErrorCode::NotInDomain, "point is not in K' = square x simplex");
  }
  ComplexChartPoint z(factors(x));
  for (std::size_t k = 0; k < z.size(); ++k) {
    z[k] = std::polar(std::sqrt(x[2 * k + 1]), 2.0 * x[2 * k]);
  }
  return z;
}

ProductPoint chart_j_inv(const ComplexChartPoint& z) {
  ProductPoint x(2 * z.size());
  for (std::size_t k = 0; k < z.size(); ++k) {
    if (z[k] == 0.0) {
      std::ostringstream os;
      os << "z_" << k + 1 << " = 0 lies on a coordinate axis";
      throw Error(ErrorCode::OnAxes, os.str());
    }
    if (z[k].imag() == 0.0 && z[k].real() > 0.0) {
      std::ostringstream os;
      os << "arg z_" << k + 1 << " = 0 maps to q = 0 or pi";
      throw Error(ErrorCode::BranchBoundary, os.str());
    }
    double q = 0.5 * std::arg(z[k]);
    if (q <= 0.0) q += kPi;
    x[2 * k] = q;
    x[2 * k + 1] = std::norm(z[k]);
  }
  return x;
}

ComplexChartPoint full_embedding(const ProductPoint& ball_point,
                                 const SigmaMap& map) {
  return chart_j(phi(ball_point, map));
}

ComplexChartPoint full_embedding(const ProductPoint& ball_point,
                                 const PackingParams& params) {
  return full_embedding(ball_point, SigmaMap(params));
}

double clifford_distance(const ComplexChartPoint& z,
                         const PackingParams& params) {
  double out = 0.0;
  for (const auto& w : z) {
    out = std::max(out, std::abs(std::norm(w) - params.c()));
  }
  return out;
}

double chart_symplectic_check(const ProductPoint& x) {
  const DomainSpec domain(static_cast<int>(factors(x)));
  bool clear = x.size() % 2 == 0 && domain.in_k_prime(x);
  for (std::size_t k = 0; clear && k < factors(x); ++k) {
    clear = x[2 * k] >= kAngleClearance && x[2 * k] <= kPi - kAngleClearance;
  }
  if (!clear) {
    throw Error(ErrorCode::PreconditionViolated,
                "chart check needs a point of K' away from q = 0, pi");
  }
  const std::size_t d = x.size();
  const std::vector<double> jac =
      central_jacobian(chart_coordinates, x, d);
  auto J = [&](std::size_t i, std::size_t j) { return jac[i * d + j]; };

  // Both forms are block diagonal in pairs: dx ^ dy has block
  // [[0, 1], [-1, 0]] in (x, y); dp ^ dq has [[0, -1], [1, 0]] in (q, p).
  double defect = 0.0;
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = 0; b < d; ++b) {
      double pulled = 0.0;
      for (std::size_t k = 0; k < d / 2; ++k) {
        pulled += J(2 * k, a) * J(2 * k + 1, b) - J(2 * k + 1, a) * J(2 * k, b);
      }
      double target = 0.0;
      if (a / 2 == b / 2 && a != b) target = (a % 2 == 0) ? -1.0 : 1.0;
      defect = std::max(defect, std::abs(pulled - target));
    }
  }
  return defect;
}

}  // namespace relpack
