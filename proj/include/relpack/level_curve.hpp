#pragma once

#include <optional>

#include "relpack/params.hpp"
#include "relpack/types.hpp"

namespace relpack {

/// Shape parameters of one curve of the family,
///   |(Q - pi/2)/a|^m + |(P - c)/h|^m = 1,
/// together with their derivatives in the enclosed area A.
struct CurveShape {
  double area = 0.0;
  double h = 0.0;
  double a = 0.0;
  double m = 2.0;
  double dh = 0.0;
  double da = 0.0;
  double dm = 0.0;
  double dhh = 0.0;
  double daa = 0.0;
  double dmm = 0.0;
};

struct ShapeParams {
  double h = 0.0;
  double a = 0.0;
  double m = 2.0;
};

/// Point of the closed quarter arc x, y >= 0, relative to the basepoint.
struct QuadrantPoint {
  double x = 0.0;
  double y = 0.0;
};

/// A point of the quarter arc and d(x, y)/d(A, phi) there; columns are
/// the A and phi directions.
struct QuadrantDerivative {
  QuadrantPoint point;
  Mat2 d;
};

/// The nested family Gamma_A, 0 < A < pi r^2, of closed curves around
/// z0 = (pi/2, c). Gamma_A encloses area exactly A, lies in the band
/// |P - c| <= A/(2 pi) + eps/2 and in pi/2 +- (pi/2 - delta_Q).
///
/// Curves are parametrised by the action-angle coordinate phi in [0, 1):
/// phi = 0 at the right midline crossing, counterclockwise, normalised so
/// that (A, phi) -> (Q, P) has unit Jacobian. That normalisation is what
/// makes the disc map built on top of this family area preserving.
///
/// The family is defined slightly past A = pi r^2 (up to
/// extended_max_area()) so finite-difference stencils at the rim of the
/// disc stay inside the domain of the formulas.
class LevelCurveFamily {
 public:
  /// Throws Error{ScheduleInfeasible} when no exponent cap keeps the
  /// outermost curve inside the band and width budget.
  explicit LevelCurveFamily(const PackingParams& params);

  const PackingParams& params() const { return params_; }
  double max_area() const;
  double extended_max_area() const;
  /// delta_Q: every curve stays in [delta_Q, pi - delta_Q] in Q.
  double q_margin() const { return q_margin_; }
  double max_halfwidth() const { return max_halfwidth_; }
  int height_sharpness() const { return height_sharpness_; }
  int width_sharpness() const { return width_sharpness_; }
  /// Exponent of the outermost (extended) curve.
  double max_exponent() const { return max_exponent_; }

  /// Requires 0 < A <= extended_max_area().
  CurveShape shape(double area) const;

  /// Point of Gamma_A at angle phi (any real; reduced mod 1).
  ChartPoint point(double area, double phi) const;

  /// Quarter arc: phi in [0, 1/4] mapped to x >= 0, y >= 0.
  QuadrantPoint quadrant_point(const CurveShape& shape, double phi) const;

  /// quadrant_point with its derivative in (A, phi). The determinant is
  /// det[X_A, X_t] / (d phi / d t) for the branch parameter t, so it
  /// equals 1 exactly when phi is the flow-time coordinate of the family.
  QuadrantDerivative quadrant_derivative(const CurveShape& shape,
                                         double phi) const;

  /// Inverse of quadrant_point for a point (x, y) on the quarter arc.
  double quadrant_angle(const CurveShape& shape, double x, double y) const;

  /// (x/a)^m + (y/h)^m - 1. Negative inside the curve.
  static double implicit(const CurveShape& shape, double x, double y);

  /// Area A of the curve through basepoint offset (x, y), searching
  /// A in (0, extended_max_area()]. Returns nullopt if the point lies on
  /// or outside the outermost curve. Returns 0 for x = y = 0.
  std::optional<double> locate(double x, double y) const;

 private:
  PackingParams params_;
  double q_margin_;
  double max_halfwidth_;
  double extended_radius_squared_;
  int height_sharpness_;
  int width_sharpness_;
  double max_exponent_;
};

/// Shape of Gamma_A. Pre: 0 < A < pi r^2.
ShapeParams shape_schedule(double area, const PackingParams& params);

/// Point of Gamma_A at sweep parameter phi. Pre: 0 < A < pi r^2, phi in [0,1).
ChartPoint level_curve_point(double area, double phi, const PackingParams& params);

/// Enclosed area of Gamma_A by the polygon line integral
/// 1/2 sum (Q dP - P dQ) over vertices on the curve, refined by
/// doubling and Richardson extrapolation. Throws
/// Error{QuadratureNonConvergent} if refinements keep disagreeing.
double enclosed_area(const LevelCurveFamily& family, double area);
double enclosed_area(double area, const PackingParams& params);

}  // namespace relpack
