#pragma once

#include <vector>

#include "relpack/level_curve.hpp"
#include "relpack/params.hpp"
#include "relpack/types.hpp"

namespace relpack {

/// A planar map of the disc B^2(r) into the target rectangle, as seen by
/// the verification harness. Test fixtures substitute deliberately broken
/// maps through this interface.
class DiscMap {
 public:
  virtual ~DiscMap() = default;

  virtual const PackingParams& params() const = 0;

  /// Image of a disc point. Defined a little beyond the rim of the disc so
  /// that difference stencils of rim points can be evaluated; no
  /// open-ball check.
  virtual ChartPoint evaluate(const DiscPoint& point) const = 0;

  /// Preimage of an image point. Throws Error{NotInImage}.
  virtual DiscPoint invert(const ChartPoint& point) const = 0;

  /// d(Q, P)/d(q, p). Central differences (step 1e-5) unless a map
  /// knows its derivative in closed form.
  virtual Mat2 derivative(const DiscPoint& point) const;
};

/// The area-preserving embedding sigma: B^2(r) -> (0, pi) x (0, 2c).
///
/// A disc point of squared radius u and polar angle theta goes to the
/// point of the level curve Gamma_{pi u} at angle coordinate
/// theta / (2 pi). Both (u, theta) on the disc and (A, phi) on the
/// family are area coordinates, so the composite has unit Jacobian.
///
/// Properties:
///   |P - c| <= u/2 + eps/2 (strictly inside the band u/2 + eps),
///   P == c exactly on the diameter p == 0, sign(P - c) == sign(p),
///   sigma(q, -p) == (Q, 2c - P), sigma(0, 0) == (pi/2, c).
class SigmaMap final : public DiscMap {
 public:
  explicit SigmaMap(const PackingParams& params);

  const PackingParams& params() const override { return family_.params(); }
  const LevelCurveFamily& family() const { return family_; }

  ChartPoint evaluate(const DiscPoint& point) const override;
  DiscPoint invert(const ChartPoint& point) const override;

  /// Closed form by the chain rule (q, p) -> (A, phi) -> (Q, P).
  Mat2 derivative(const DiscPoint& point) const override;

  /// Checked forward map: requires q^2 + p^2 < r^2 - 1e-14.
  ChartPoint operator()(const DiscPoint& point) const;

  /// Checked inverse: the preimage must lie in the open disc.
  DiscPoint inverse(const ChartPoint& point) const;

  /// Checked derivative; the identity at the centre.
  Mat2 jacobian(const DiscPoint& point) const;

 private:
  LevelCurveFamily family_;
};

/// Throws Error{PreconditionViolated} unless u < r^2 - 1e-14.
void require_in_disc(const DiscPoint& point, const PackingParams& params);

ChartPoint sigma(const DiscPoint& point, const PackingParams& params);
DiscPoint sigma_inv(const ChartPoint& point, const PackingParams& params);
Mat2 sigma_jacobian(const DiscPoint& point, const PackingParams& params);

/// Jacobian of any DiscMap by central differences, step 1e-5.
Mat2 map_jacobian(const DiscMap& map, const DiscPoint& point);

/// Throws Error{PreconditionViolated} unless x has 2n coordinates with
/// sum of squares < r^2 - 1e-14.
void require_in_ball(const ProductPoint& x, const PackingParams& params);

/// Phi(z_1, ..., z_n) = (sigma(z_1), ..., sigma(z_n)), interleaved
/// (Q1, P1, ..., Qn, Pn).
ProductPoint phi(const ProductPoint& ball_point, const SigmaMap& map);
ProductPoint phi(const ProductPoint& ball_point, const PackingParams& params);

/// Slacks of the band property per factor and of the simplex constraint.
/// All entries are >= 0 for the true sigma; global > 0.
struct PropertyMargins {
  std::vector<double> upper;  // (c + u_k/2 + eps) - P_k
  std::vector<double> lower;  // P_k - (c - u_k/2 - eps)
  double global = 0.0;        // 1 - sum P_k
};

PropertyMargins property_margins(const ProductPoint& ball_point,
                                 const DiscMap& map);
PropertyMargins property_margins(const ProductPoint& ball_point,
                                 const PackingParams& params);

}  // namespace relpack
