#pragma once

// Closed-form pieces of the unit superellipse |x|^m + |y|^m = 1.

namespace relpack::superellipse {

/// Fraction of the bounding box covered by the superellipse,
/// Gamma(1+1/m)^2 / Gamma(1+2/m). Equals pi/4 at m = 2, tends to 1.
double fill_factor(double m);

/// log fill_factor as a function of s = 1/m, and its s-derivative.
double log_fill(double s);
double log_fill_ds(double s);
double log_fill_ds2(double s);

/// Inverse of log_fill on s in (0, 1/2]: returns s with log_fill(s) == target.
/// target must lie in [log(pi/4), 0).
double inverse_log_fill(double target);

/// Psi(eta, m) = int_0^eta (1 - t^m)^(1/m) dt and its partial derivatives.
/// g = (1 - eta^m)^(1/m) is the integrand, i.e. d Psi / d eta.
struct ArcIntegral {
  double value = 0.0;
  double d_m = 0.0;
  double d_mm = 0.0;
  double g = 1.0;
  double g_eta = 0.0;
  double g_m = 0.0;
};

/// Valid for 0 <= eta with eta^m <= 0.5 + 1e-9 (the series converges
/// geometrically with ratio eta^m). Beyond that the caller swaps axes.
ArcIntegral arc_integral(double eta, double m);

/// eta at which the quarter arc is split between the two graph
/// parametrisations: eta^m = 1/2.
double switch_abscissa(double m);

}  // namespace relpack::superellipse
