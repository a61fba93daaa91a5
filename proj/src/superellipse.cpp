#include "relpack/superellipse.hpp"

#include <boost/math/special_functions/digamma.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/special_functions/trigamma.hpp>
#include <cmath>
#include <numbers>

#include "bracketed_newton.hpp"
#include "relpack/errors.hpp"

namespace relpack::superellipse {

// Gamma(1 + s) - 1 keeps full relative accuracy for small s, where
// lgamma(1 + s) would first round 1 + s.
double log_fill(double s) {
  return 2.0 * std::log1p(boost::math::tgamma1pm1(s)) -
         std::log1p(boost::math::tgamma1pm1(2.0 * s));
}

double log_fill_ds(double s) {
  return 2.0 * (boost::math::digamma(1.0 + s) - boost::math::digamma(1.0 + 2.0 * s));
}

double log_fill_ds2(double s) {
  return 2.0 * (boost::math::trigamma(1.0 + s) -
                2.0 * boost::math::trigamma(1.0 + 2.0 * s));
}

double fill_factor(double m) { return std::exp(log_fill(1.0 / m)); }

double inverse_log_fill(double target) {
  const double lo_value = std::log(std::numbers::pi / 4.0);
  if (target <= lo_value) return 0.5;
  if (!(target < 0.0)) {
    throw Error(ErrorCode::ScheduleInfeasible,
                "fill factor 1 requires an infinite exponent");
  }
  // log_fill is strictly decreasing on (0, 1/2]; near s = 0 it behaves
  // like -(pi^2/6) s^2.
  const double start = std::min(0.5, std::sqrt(-target * 6.0) / std::numbers::pi);
  const double s = detail::bracketed_newton(
      [&](double x) {
        return detail::Eval{log_fill(x) - target, log_fill_ds(x)};
      },
      0.0, 0.5, false, start, 2e-16);
  return s;
}

double switch_abscissa(double m) { return std::exp(-std::numbers::ln2 / m); }

ArcIntegral arc_integral(double eta, double m) {
  ArcIntegral out;
  if (eta <= 0.0) return out;

  const double log_eta = std::log(eta);
  const double rho = std::exp(m * log_eta);
  const double log1m_rho = std::log1p(-rho);

  out.g = std::exp(log1m_rho / m);
  out.g_eta = -(rho / eta) * out.g / (1.0 - rho);
  out.g_m = out.g * (-log1m_rho / (m * m) - rho * log_eta / (m * (1.0 - rho)));

  // 1 - (1 - t^m)^(1/m) = sum_k b_k t^{mk}, b_1 = 1/m,
  // b_{k+1} = b_k (k - 1/m) / (k + 1). Integrate termwise.
  double b = 1.0 / m;
  double dlog_b = -1.0 / m;
  double d2log_b = 1.0 / (m * m);
  double rho_k = rho;
  double sum = 0.0;
  double dsum = 0.0;
  double d2sum = 0.0;
  for (int k = 1; k < 400; ++k) {
    const double denom = m * k + 1.0;
    const double term = b * rho_k * eta / denom;
    const double dlog_term = dlog_b + k * log_eta - k / denom;
    sum += term;
    dsum += term * dlog_term;
    d2sum += term * (dlog_term * dlog_term + d2log_b + k * k / (denom * denom));
    if (term < 1e-19 * eta && k > 2) break;
    const double mk1 = m * k - 1.0;
    dlog_b += 1.0 / (m * mk1);
    d2log_b -= (2.0 * m * k - 1.0) / (m * m * mk1 * mk1);
    b *= (k - 1.0 / m) / (k + 1.0);
    rho_k *= rho;
  }
  out.value = eta - sum;
  out.d_m = -dsum;
  out.d_mm = -d2sum;
  return out;
}

}  // namespace relpack::superellipse
