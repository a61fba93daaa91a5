#pragma once

#include <optional>

namespace relpack {

/// Parameters of the relative packing B^{2n}(r) -> (CP^n, Clifford torus).
///
/// Only make_params() constructs these, so every instance satisfies
/// r^2 < 2/(n+1) and 0 < epsilon <= max_epsilon().
class PackingParams {
 public:
  int n() const { return n_; }
  double r() const { return r_; }
  double r_squared() const { return r_ * r_; }
  /// Midline level 1/(n+1); the Clifford torus sits at |z_k|^2 = c.
  double c() const { return c_; }
  double epsilon() const { return epsilon_; }
  /// Largest admissible slack, (1/(n+1) - r^2/2) / n.
  double max_epsilon() const { return max_epsilon_; }
  /// Half-height of the target rectangle (0, pi) x (0, 2c).
  double target_height() const { return 2.0 * c_; }

 private:
  friend PackingParams make_params(int, double, std::optional<double>);
  PackingParams(int n, double r, double c, double eps, double max_eps)
      : n_(n), r_(r), c_(c), epsilon_(eps), max_epsilon_(max_eps) {}

  int n_;
  double r_;
  double c_;
  double epsilon_;
  double max_epsilon_;
};

/// Squared radius bound 2/(n+1); the construction needs r^2 strictly below it.
double radius_squared_bound(int n);

/// Default slack (1/(n+1) - r^2/2)/n. Makes n*c + r^2/2 + n*eps equal 1.
double default_epsilon(int n, double r);

/// Throws Error{RadiusAtOrAboveBound} when r^2 >= 2/(n+1),
/// Error{InvalidEpsilon} when epsilon is outside (0, max_epsilon],
/// Error{InvalidDimension} when n < 2 or r <= 0.
PackingParams make_params(int n, double r,
                          std::optional<double> epsilon = std::nullopt);

}  // namespace relpack
