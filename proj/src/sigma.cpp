#include "relpack/sigma.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "relpack/errors.hpp"
#include "relpack/finite_difference.hpp"

namespace relpack {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kRimExclusion = 1e-14;

}  // namespace

Mat2 DiscMap::derivative(const DiscPoint& point) const {
  return map_jacobian(*this, point);
}

SigmaMap::SigmaMap(const PackingParams& params) : family_(params) {}

ChartPoint SigmaMap::evaluate(const DiscPoint& point) const {
  const double c = family_.params().c();
  const double u = point.squared_radius();
  if (u == 0.0) return {kPi / 2.0, c};
  const CurveShape shape = family_.shape(kPi * u);
  const double phi =
      std::atan2(std::abs(point.p), std::abs(point.q)) / (2.0 * kPi);
  const QuadrantPoint qp = family_.quadrant_point(shape, phi);
  return {kPi / 2.0 + std::copysign(qp.x, point.q),
          c + std::copysign(qp.y, point.p)};
}

DiscPoint SigmaMap::invert(const ChartPoint& point) const {
  const double dx = point.Q - kPi / 2.0;
  const double dy = point.P - family_.params().c();
  const double x = std::abs(dx);
  const double y = std::abs(dy);
  const auto area = family_.locate(x, y);
  if (!area) {
    std::ostringstream os;
    os << "point (" << point.Q << ", " << point.P
       << ") lies outside every level curve";
    throw Error(ErrorCode::NotInImage, os.str());
  }
  if (*area == 0.0) return {0.0, 0.0};
  const CurveShape shape = family_.shape(*area);
  const double angle = 2.0 * kPi * family_.quadrant_angle(shape, x, y);
  const double radius = std::sqrt(*area / kPi);
  return {std::copysign(radius * std::cos(angle), dx),
          std::copysign(radius * std::sin(angle), dy)};
}

ChartPoint SigmaMap::operator()(const DiscPoint& point) const {
  require_in_disc(point, params());
  return evaluate(point);
}

DiscPoint SigmaMap::inverse(const ChartPoint& point) const {
  const DiscPoint pre = invert(point);
  if (!(pre.squared_radius() < params().r_squared())) {
    throw Error(ErrorCode::NotInImage,
                "preimage lies outside the open disc B^2(r)");
  }
  return pre;
}

Mat2 SigmaMap::derivative(const DiscPoint& point) const {
  const double u = point.squared_radius();
  Mat2 jac;
  if (u == 0.0) {
    jac(0, 0) = 1.0;
    jac(1, 1) = 1.0;
    return jac;
  }
  // Work in the first quadrant; reflections conjugate the result.
  const double q = std::abs(point.q);
  const double p = std::abs(point.p);
  const CurveShape shape = family_.shape(kPi * u);
  const QuadrantDerivative qd =
      family_.quadrant_derivative(shape, std::atan2(p, q) / (2.0 * kPi));
  const double area_grad[2] = {2.0 * kPi * q, 2.0 * kPi * p};
  const double angle_grad[2] = {-p / (2.0 * kPi * u), q / (2.0 * kPi * u)};
  const double flip[2] = {std::signbit(point.q) ? -1.0 : 1.0,
                          std::signbit(point.p) ? -1.0 : 1.0};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      jac(i, j) = flip[i] * flip[j] *
                  (qd.d(i, 0) * area_grad[j] + qd.d(i, 1) * angle_grad[j]);
    }
  }
  return jac;
}

Mat2 SigmaMap::jacobian(const DiscPoint& point) const {
  require_in_disc(point, params());
  return derivative(point);
}

Mat2 map_jacobian(const DiscMap& map, const DiscPoint& point) {
  return central_jacobian([&](const DiscPoint& x) { return map.evaluate(x); },
                          point);
}

void require_in_disc(const DiscPoint& point, const PackingParams& params) {
  const double u = point.squared_radius();
  if (!(u < params.r_squared() - kRimExclusion)) {
    std::ostringstream os;
    os << "point (" << point.q << ", " << point.p
       << ") is not in the open disc of radius " << params.r();
    throw Error(ErrorCode::PreconditionViolated, os.str());
  }
}

void require_in_ball(const ProductPoint& x, const PackingParams& params) {
  if (x.size() != 2 * static_cast<std::size_t>(params.n())) {
    throw Error(ErrorCode::PreconditionViolated,
                "ball point must have 2n coordinates");
  }
  double u = 0.0;
  for (double v : x) u += v * v;
  if (!(u < params.r_squared() - kRimExclusion)) {
    throw Error(ErrorCode::PreconditionViolated,
                "point is not in the open ball B^2n(r)");
  }
}

ChartPoint sigma(const DiscPoint& point, const PackingParams& params) {
  return SigmaMap(params)(point);
}

DiscPoint sigma_inv(const ChartPoint& point, const PackingParams& params) {
  return SigmaMap(params).inverse(point);
}

Mat2 sigma_jacobian(const DiscPoint& point, const PackingParams& params) {
  return SigmaMap(params).jacobian(point);
}

ProductPoint phi(const ProductPoint& ball_point, const SigmaMap& map) {
  require_in_ball(ball_point, map.params());
  ProductPoint image(ball_point.size());
  for (std::size_t k = 0; k < ball_point.size() / 2; ++k) {
    const ChartPoint z = map.evaluate(factor(ball_point, k));
    image[2 * k] = z.Q;
    image[2 * k + 1] = z.P;
  }
  return image;
}

ProductPoint phi(const ProductPoint& ball_point, const PackingParams& params) {
  return phi(ball_point, SigmaMap(params));
}

PropertyMargins property_margins(const ProductPoint& ball_point,
                                 const DiscMap& map) {
  const PackingParams& params = map.params();
  require_in_ball(ball_point, params);
  const double c = params.c();
  const double eps = params.epsilon();
  PropertyMargins out;
  double sum_p = 0.0;
  for (std::size_t k = 0; k < ball_point.size() / 2; ++k) {
    const DiscPoint z = factor(ball_point, k);
    const double half_u = 0.5 * z.squared_radius();
    const ChartPoint w = map.evaluate(z);
    out.upper.push_back((c + half_u + eps) - w.P);
    out.lower.push_back(w.P - (c - half_u - eps));
    sum_p += w.P;
  }
  out.global = 1.0 - sum_p;
  return out;
}

PropertyMargins property_margins(const ProductPoint& ball_point,
                                 const PackingParams& params) {
  return property_margins(ball_point, SigmaMap(params));
}

}  // namespace relpack
