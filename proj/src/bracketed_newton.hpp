#pragma once

#include <cmath>

namespace relpack::detail {

struct Eval {
  double value;
  double slope;
};

/// Root of a monotone f on [lo, hi] that changes sign there, starting
/// from x. Newton steps are taken only while they stay inside the
/// bracket and at least halve the previous step; otherwise bisect.
/// Stops when the step or the bracket falls below rel_tol * |x|.
template <class F>
double bracketed_newton(F&& f, double lo, double hi, bool increasing,
                        double x, double rel_tol, int max_iter = 200) {
  const double orient = increasing ? 1.0 : -1.0;
  double last_step = hi - lo;
  for (int it = 0; it < max_iter; ++it) {
    const Eval e = f(x);
    const double g = orient * e.value;
    if (g == 0.0) return x;
    if (g < 0.0) {
      lo = x;
    } else {
      hi = x;
    }
    const double newton = x - e.value / e.slope;
    const double newton_step = std::abs(newton - x);
    if (newton_step <= rel_tol * std::abs(x)) return newton;
    double next;
    if (newton > lo && newton < hi && newton_step <= 0.5 * last_step) {
      next = newton;
      last_step = newton_step;
    } else {
      next = 0.5 * (lo + hi);
      last_step = 0.5 * (hi - lo);
    }
    x = next;
    if (hi - lo <= rel_tol * std::abs(x)) return x;
  }
  return x;
}

}  // namespace relpack::detail
