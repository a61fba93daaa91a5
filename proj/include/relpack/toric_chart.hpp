#pragma once

#include <numbers>
#include <vector>

#include "relpack/params.hpp"
#include "relpack/sigma.hpp"
#include "relpack/types.hpp"

namespace relpack {

/// Domains of the action-angle picture of CP^n \ CP^{n-1}.
///
///   square  (0, pi)^n                      angles q
///   simplex p_k > 0, sum p_k < 1           actions p
///   K'      square x simplex
///   L'      p_k = 1/(n+1) for all k        the Clifford torus
///   real    all p_k = 0                    the real slice of B^{2n}(r)
///
/// Points are interleaved (q1, p1, ..., qn, pn).
class DomainSpec {
 public:
  explicit DomainSpec(int n) : n_(n) {}

  int n() const { return n_; }
  double clifford_level() const { return 1.0 / (n_ + 1); }
  /// Area of a complex line, the normalisation of the Fubini-Study form.
  static constexpr double line_area() { return std::numbers::pi; }

  bool in_square(const ProductPoint& x) const;
  bool in_simplex(const ProductPoint& x) const;
  bool in_k_prime(const ProductPoint& x) const;
  /// |p_k - 1/(n+1)| <= tol for all k, and x in K'.
  bool on_l_prime(const ProductPoint& x, double tol = 0.0) const;
  /// All p-coordinates exactly zero.
  bool in_real_slice(const ProductPoint& x) const;

 private:
  bool has_size(const ProductPoint& x) const {
    return x.size() == 2 * static_cast<std::size_t>(n_);
  }
  int n_;
};

/// (|z_1|^2, ..., |z_n|^2).
std::vector<double> moment_map(const ComplexChartPoint& z);

/// z_k = sqrt(p_k) exp(2 i q_k). Throws Error{NotInDomain} outside K'.
ComplexChartPoint chart_j(const ProductPoint& x);

/// Inverse of chart_j: p_k = |z_k|^2, q_k = arg(z_k)/2 taken in (0, pi).
/// Throws Error{OnAxes} if some z_k = 0 and Error{BranchBoundary} if some
/// z_k is real and positive.
ProductPoint chart_j_inv(const ComplexChartPoint& z);

/// chart_j(phi(x)) for x in the open ball B^{2n}(r).
ComplexChartPoint full_embedding(const ProductPoint& ball_point,
                                 const SigmaMap& map);
ComplexChartPoint full_embedding(const ProductPoint& ball_point,
                                 const PackingParams& params);

/// max_k | |z_k|^2 - 1/(n+1) |.
double clifford_distance(const ComplexChartPoint& z,
                         const PackingParams& params);

/// Max-norm of J^T Omega_std J - Omega_pq for the central-difference
/// Jacobian J of chart_j at x, with C^n = R^{2n} ordered (x1, y1, ...).
/// Requires x in K' with every q_k at least 1e-6 from {0, pi}.
double chart_symplectic_check(const ProductPoint& x);

}  // namespace relpack
