#include "relpack/params.hpp"

#include <cmath>
#include <sstream>

#include "relpack/errors.hpp"

namespace relpack {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::RadiusAtOrAboveBound: return "RadiusAtOrAboveBound";
    case ErrorCode::InvalidEpsilon: return "InvalidEpsilon";
    case ErrorCode::InvalidDimension: return "InvalidDimension";
    case ErrorCode::ScheduleInfeasible: return "ScheduleInfeasible";
    case ErrorCode::QuadratureNonConvergent: return "QuadratureNonConvergent";
    case ErrorCode::NotInImage: return "NotInImage";
    case ErrorCode::NotInDomain: return "NotInDomain";
    case ErrorCode::OnAxes: return "OnAxes";
    case ErrorCode::BranchBoundary: return "BranchBoundary";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
  }
  return "Unknown";
}

double radius_squared_bound(int n) { return 2.0 / (n + 1); }

double default_epsilon(int n, double r) {
  return (1.0 / (n + 1) - 0.5 * r * r) / n;
}

PackingParams make_params(int n, double r, std::optional<double> epsilon) {
  if (n < 2) {
    throw Error(ErrorCode::InvalidDimension, "dimension n must be >= 2");
  }
  if (!(r > 0.0) || !std::isfinite(r)) {
    throw Error(ErrorCode::InvalidDimension, "radius must be positive");
  }
  if (r * r >= radius_squared_bound(n)) {
    std::ostringstream os;
    os << "radius at or above Biran–Cornea bound: r = " << r
       << ", need r^2 < " << radius_squared_bound(n);
    throw Error(ErrorCode::RadiusAtOrAboveBound, os.str());
  }
  const double max_eps = default_epsilon(n, r);
  // Float rounding can put r^2 just under the bound with max_eps == 0.
  if (!(max_eps > 0.0)) {
    throw Error(ErrorCode::RadiusAtOrAboveBound,
                "radius at or above Biran–Cornea bound (zero slack)");
  }
  const double eps = epsilon.value_or(max_eps);
  if (!(eps > 0.0) || eps > max_eps || !std::isfinite(eps)) {
    std::ostringstream os;
    os << "epsilon must lie in (0, " << max_eps << "], got " << eps;
    throw Error(ErrorCode::InvalidEpsilon, os.str());
  }
  return PackingParams(n, r, 1.0 / (n + 1), eps, max_eps);
}

}  // namespace relpack
