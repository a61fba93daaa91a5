#include "relpack/level_curve.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "bracketed_newton.hpp"
#include "relpack/errors.hpp"
#include "relpack/superellipse.hpp"

namespace relpack {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kHeightSharpness = 8;
constexpr double kHeightExponent = 0.1;
constexpr int kMinWidthSharpness = 8;
constexpr int kMaxWidthSharpness = 512;
constexpr double kExponentCap = 4096.0;
// The family is evaluated up to radius r + kRimExtension.
constexpr double kRimExtension = 1e-4;

// Value with first and second derivative in one variable.
struct Jet {
  double v = 0.0;
  double d = 0.0;
  double dd = 0.0;
};

Jet operator+(Jet x, Jet y) { return {x.v + y.v, x.d + y.d, x.dd + y.dd}; }
Jet operator-(Jet x, Jet y) { return {x.v - y.v, x.d - y.d, x.dd - y.dd}; }
Jet operator+(Jet x, double c) { return {x.v + c, x.d, x.dd}; }
Jet operator+(double c, Jet x) { return x + c; }
Jet operator*(double c, Jet x) { return {c * x.v, c * x.d, c * x.dd}; }
Jet operator*(Jet x, Jet y) {
  return {x.v * y.v, x.d * y.v + x.v * y.d,
          x.dd * y.v + 2.0 * x.d * y.d + x.v * y.dd};
}

// f(x) given f, f', f'' at x.v.
Jet chain(Jet x, double f, double f1, double f2) {
  return {f, f1 * x.d, f2 * x.d * x.d + f1 * x.dd};
}

Jet inv(Jet x) {
  const double r = 1.0 / x.v;
  return chain(x, r, -r * r, 2.0 * r * r * r);
}
Jet operator/(Jet x, Jet y) { return x * inv(y); }
Jet exp(Jet x) {
  const double e = std::exp(x.v);
  return chain(x, e, e, e);
}
Jet log(Jet x) { return chain(x, std::log(x.v), 1.0 / x.v, -1.0 / (x.v * x.v)); }
Jet log1p(Jet x) {
  const double r = 1.0 / (1.0 + x.v);
  return chain(x, std::log1p(x.v), r, -r * r);
}
Jet pow(Jet x, double c) {
  const double p = std::pow(x.v, c);
  return chain(x, p, c * p / x.v, c * (c - 1.0) * p / (x.v * x.v));
}

// Smooth lower envelope (v1^-k + v2^-k)^(-1/k); never exceeds min(v1, v2).
Jet soft_min(Jet v1, Jet v2, int k) {
  const bool first = v1.v <= v2.v;
  const Jet lo = first ? v1 : v2;
  const Jet hi = first ? v2 : v1;
  return lo * pow(1.0 + pow(lo / hi, k), -1.0 / k);
}

// log of (1 + t^k)^(1/k) with t = x / cap.
Jet log_excess(Jet x, double cap, int k) {
  const Jet cap_jet{cap, 0.0, 0.0};
  if (x.v <= cap) return (1.0 / k) * log1p(pow(x / cap_jet, k));
  return log(x / cap_jet) + (1.0 / k) * log1p(pow(cap_jet / x, k));
}

Jet inverse_log_fill(Jet target) {
  const double s = superellipse::inverse_log_fill(target.v);
  const double f1 = superellipse::log_fill_ds(s);
  const double f2 = superellipse::log_fill_ds2(s);
  const double s1 = target.d / f1;
  return {s, s1, (target.dd - f2 * s1 * s1) / f1};
}

Jet constant(double c) { return {c, 0.0, 0.0}; }

struct Angle {
  double value;
  double slope;
};

// Right-side graph x = a g(y/h): angle measured from the midline crossing.
Angle angle_right(const CurveShape& s, double eta) {
  const auto arc = superellipse::arc_integral(eta, s.m);
  const double ah_rate = s.da * s.h + s.a * s.dh;
  const double value = ah_rate * arc.value - s.a * s.dh * eta * arc.g +
                       s.a * s.h * s.dm * arc.d_m;
  const double slope = s.da * s.h * arc.g - s.a * s.dh * eta * arc.g_eta +
                       s.a * s.h * s.dm * arc.g_m;
  return {value, slope};
}

// Top graph y = h g(x/a): angle measured back from the top (phi = 1/4).
Angle angle_top(const CurveShape& s, double xi) {
  const auto arc = superellipse::arc_integral(xi, s.m);
  const double ah_rate = s.da * s.h + s.a * s.dh;
  const double swept = ah_rate * arc.value - s.da * s.h * xi * arc.g +
                       s.a * s.h * s.dm * arc.d_m;
  const double slope = s.a * s.dh * arc.g - s.da * s.h * xi * arc.g_eta +
                       s.a * s.h * s.dm * arc.g_m;
  return {0.25 - swept, -slope};
}

// Solve f(t) = target for monotone f on [lo, hi] with f(lo), f(hi)
// bracketing target.
template <class F>
double solve_monotone(F&& f, double target, double lo, double hi,
                      double f_lo, double f_hi) {
  const bool increasing = f_hi >= f_lo;
  if (increasing ? target <= f_lo : target >= f_lo) return lo;
  if (increasing ? target >= f_hi : target <= f_hi) return hi;
  const double start = lo + (hi - lo) * (target - f_lo) / (f_hi - f_lo);
  return detail::bracketed_newton(
      [&](double t) {
        const Angle v = f(t);
        return detail::Eval{v.value - target, v.slope};
      },
      lo, hi, increasing, start, 2e-16);
}

}  // namespace

namespace {

// Below the band line (u + eps)/2 by eps (1 - chi)/2; chi ~ (u/eps)^beta
// for u << eps keeps d log h / d log u >= beta, so the top of a curve
// never collapses onto a vanishing sector of the disc.
Jet height_of(Jet u, double eps, int sharpness) {
  const Jet chi = pow(u / (u + eps), kHeightExponent);
  return soft_min(pow(u, 0.5), 0.5 * (u + eps * chi), sharpness);
}

// log R, R = pi u / (4 h a_max): fill factor a full-width curve would need.
Jet log_width_ratio(Jet u, double eps, int sharpness, double max_halfwidth) {
  const Jet h = height_of(u, eps, sharpness);
  return log((kPi / (4.0 * max_halfwidth)) * u / h);
}

}  // namespace

LevelCurveFamily::LevelCurveFamily(const PackingParams& params)
    : params_(params),
      q_margin_(std::min(0.05, kPi * params.epsilon() / 2.0)),
      max_halfwidth_(kPi / 2.0 - q_margin_),
      extended_radius_squared_((params.r() + kRimExtension) *
                               (params.r() + kRimExtension)),
      height_sharpness_(kHeightSharpness),
      width_sharpness_(0),
      max_exponent_(0.0) {
  // Pick the gentlest fill transition whose overshoot above
  // max(pi/4, sqrt R) at the outermost curve uses at most a quarter of the
  // remaining gap to F = 1.
  const double log_ratio =
      log_width_ratio(constant(extended_radius_squared_), params.epsilon(),
                      height_sharpness_, max_halfwidth_)
          .v;
  if (log_ratio >= 0.0) {
    std::ostringstream os;
    os << "outermost curve cannot enclose its area inside the band "
          "(epsilon = "
       << params.epsilon() << " too small)";
    throw Error(ErrorCode::ScheduleInfeasible, os.str());
  }
  const double ideal = std::max(kPi / 4.0, std::exp(0.5 * log_ratio));
  const double allowed = std::log(ideal + 0.25 * (1.0 - ideal));
  for (int k = kMinWidthSharpness; k <= kMaxWidthSharpness; k += 2) {
    const double log_fill =
        std::log(kPi / 4.0) +
        log_excess(constant(std::exp(0.5 * log_ratio)), kPi / 4.0, k).v;
    if (log_fill <= allowed) {
      width_sharpness_ = k;
      max_exponent_ = 1.0 / superellipse::inverse_log_fill(log_fill);
      break;
    }
  }
  if (width_sharpness_ == 0 || max_exponent_ > kExponentCap) {
    std::ostringstream os;
    os << "no exponent schedule up to m = " << kExponentCap
       << " fits the band for epsilon = " << params.epsilon();
    throw Error(ErrorCode::ScheduleInfeasible, os.str());
  }
}


double LevelCurveFamily::max_area() const {
  return kPi * params_.r_squared();
}

double LevelCurveFamily::extended_max_area() const {
  return kPi * extended_radius_squared_;
}

CurveShape LevelCurveFamily::shape(double area) const {
  if (!(area > 0.0) || area > extended_max_area()) {
    throw Error(ErrorCode::PreconditionViolated,
                "curve area outside the family's range");
  }
  // Derivatives are taken in A directly.
  const Jet u{area / kPi, 1.0 / kPi, 0.0};
  const Jet h = height_of(u, params_.epsilon(), height_sharpness_);
  const Jet ratio = log_width_ratio(u, params_.epsilon(), height_sharpness_,
                                    max_halfwidth_);

  // Fill factor F = softmax(pi/4, sqrt(R)); then a = a_max R / F < a_max,
  // F and a both increase with u, and m = 1/s starts at 2.
  const Jet log_fill = log_excess(exp(0.5 * ratio), kPi / 4.0,
                                  width_sharpness_) +
                       std::log(kPi / 4.0);
  const Jet s = inverse_log_fill(log_fill);
  const Jet a = max_halfwidth_ * exp(ratio - log_fill);
  const Jet m = inv(s);

  CurveShape out;
  out.area = area;
  out.h = h.v;
  out.a = a.v;
  out.m = m.v;
  out.dh = h.d;
  out.da = a.d;
  out.dm = m.d;
  out.dhh = h.dd;
  out.daa = a.dd;
  out.dmm = m.dd;
  return out;
}

namespace {

struct BranchPoint {
  bool right;  // steep side, parameter y/h; else flat top, parameter x/a
  double t;
};

BranchPoint solve_branch(const CurveShape& s, double phi) {
  phi = std::clamp(phi, 0.0, 0.25);
  const double split = superellipse::switch_abscissa(s.m);
  const Angle at_split = angle_right(s, split);
  if (phi <= at_split.value) {
    return {true, solve_monotone([&](double t) { return angle_right(s, t); },
                                 phi, 0.0, split, 0.0, at_split.value)};
  }
  const Angle top_split = angle_top(s, split);
  return {false, solve_monotone([&](double t) { return angle_top(s, t); },
                                phi, 0.0, split, 0.25, top_split.value)};
}

QuadrantPoint branch_point(const CurveShape& s, const BranchPoint& b) {
  const double g = superellipse::arc_integral(b.t, s.m).g;
  return b.right ? QuadrantPoint{s.a * g, s.h * b.t}
                 : QuadrantPoint{s.a * b.t, s.h * g};
}

}  // namespace

QuadrantPoint LevelCurveFamily::quadrant_point(const CurveShape& s,
                                               double phi) const {
  return branch_point(s, solve_branch(s, phi));
}

QuadrantDerivative LevelCurveFamily::quadrant_derivative(const CurveShape& s,
                                                         double phi) const {
  const BranchPoint b = solve_branch(s, phi);
  const auto arc = superellipse::arc_integral(b.t, s.m);
  const double t = b.t;

  // phi(A, t) on either branch is
  //   +-[p1 Psi - p2 t g + p3 Psi_m] (+ 1/4 on the top),
  // with p1 = (a h)', p3 = a h m', and p2 = a h' (side) or a' h (top).
  const double p1 = s.da * s.h + s.a * s.dh;
  const double p1_a = s.daa * s.h + 2.0 * s.da * s.dh + s.a * s.dhh;
  const double p2 = b.right ? s.a * s.dh : s.da * s.h;
  const double p2_a = b.right ? s.da * s.dh + s.a * s.dhh
                              : s.daa * s.h + s.da * s.dh;
  const double p3 = s.a * s.h * s.dm;
  const double p3_a =
      (s.da * s.h + s.a * s.dh) * s.dm + s.a * s.h * s.dmm;
  const double sign = b.right ? 1.0 : -1.0;
  const double phi_a =
      sign * (p1_a * arc.value + p1 * arc.d_m * s.dm - p2_a * t * arc.g -
              p2 * t * arc.g_m * s.dm + p3_a * arc.d_m +
              p3 * arc.d_mm * s.dm);
  const double phi_t = b.right ? angle_right(s, t).slope : angle_top(s, t).slope;

  // Partials of (x, y) in A at fixed t and in t.
  double x_a, y_a, x_t, y_t;
  const double g_a = arc.g_m * s.dm;
  if (b.right) {
    x_a = s.da * arc.g + s.a * g_a;
    y_a = s.dh * t;
    x_t = s.a * arc.g_eta;
    y_t = s.h;
  } else {
    x_a = s.da * t;
    y_a = s.dh * arc.g + s.h * g_a;
    x_t = s.a;
    y_t = s.h * arc.g_eta;
  }

  QuadrantDerivative out;
  out.point = b.right ? QuadrantPoint{s.a * arc.g, s.h * t}
                      : QuadrantPoint{s.a * t, s.h * arc.g};
  const double x_phi = x_t / phi_t;
  const double y_phi = y_t / phi_t;
  out.d(0, 0) = x_a - x_phi * phi_a;
  out.d(1, 0) = y_a - y_phi * phi_a;
  out.d(0, 1) = x_phi;
  out.d(1, 1) = y_phi;
  return out;
}

double LevelCurveFamily::quadrant_angle(const CurveShape& s, double x,
                                        double y) const {
  const double eta = std::min(y / s.h, 1.0);
  if (std::pow(eta, s.m) <= 0.5) return angle_right(s, eta).value;
  const double xi = std::min(x / s.a, 1.0);
  return angle_top(s, xi).value;
}

ChartPoint LevelCurveFamily::point(double area, double phi) const {
  phi -= std::floor(phi);
  double reduced = phi;
  double sx = 1.0;
  double sy = 1.0;
  if (phi <= 0.25) {
  } else if (phi <= 0.5) {
    reduced = 0.5 - phi;
    sx = -1.0;
  } else if (phi <= 0.75) {
    reduced = phi - 0.5;
    sx = -1.0;
    sy = -1.0;
  } else {
    reduced = 1.0 - phi;
    sy = -1.0;
  }
  const QuadrantPoint qp = quadrant_point(shape(area), reduced);
  return {kPi / 2.0 + sx * qp.x, params_.c() + sy * qp.y};
}

double LevelCurveFamily::implicit(const CurveShape& s, double x, double y) {
  return std::exp(s.m * std::log(x / s.a)) +
         std::exp(s.m * std::log(y / s.h)) - 1.0;
}

std::optional<double> LevelCurveFamily::locate(double x, double y) const {
  if (x == 0.0 && y == 0.0) return 0.0;
  // L(rho) = log((x/a)^m + (y/h)^m) decreases through 0 at the curve
  // through (x, y); safeguarded Newton in rho.
  const double rho_max = std::sqrt(extended_radius_squared_);
  struct Value {
    double value;
    double slope;
  };
  auto level = [&](double rho) {
    const double area = std::min(kPi * rho * rho, extended_max_area());
    const CurveShape s = shape(area);
    const double lx = std::log(x / s.a);
    const double ly = std::log(y / s.h);
    const double ex = s.m * lx;
    const double ey = s.m * ly;
    const double top = std::max(ex, ey);
    const double wx = std::exp(ex - top);
    const double wy = std::exp(ey - top);
    const double sum = wx + wy;
    const double dx = s.dm * lx - s.m * s.da / s.a;
    const double dy = s.dm * ly - s.m * s.dh / s.h;
    return Value{top + std::log(sum),
                 (wx * dx + wy * dy) / sum * 2.0 * kPi * rho};
  };
  const Value at_max = level(rho_max);
  if (!(at_max.value < 0.0)) return std::nullopt;
  double lo = std::min(std::hypot(x, y), rho_max);
  Value at_lo = level(lo);
  while (!(at_lo.value > 0.0)) {
    lo *= 0.5;
    at_lo = level(lo);
  }
  const double rho = detail::bracketed_newton(
      [&](double r) {
        const Value v = level(r);
        return detail::Eval{v.value, v.slope};
      },
      lo, rho_max, false, lo, 1e-15);
  return std::min(kPi * rho * rho, extended_max_area());
}

namespace {

void require_area(double area, const PackingParams& params) {
  if (!(area > 0.0) || !(area < kPi * params.r_squared())) {
    throw Error(ErrorCode::PreconditionViolated,
                "area must lie in (0, pi r^2)");
  }
}

// Fan area of a polygon inscribed in one quarter of the curve. Vertices are
// equally spaced in y/h on the steep side and in x/a on the flat side, so
// both the near-midline sides and the long top stay resolved for large m.
double polygon_area(const CurveShape& s, std::size_t count) {
  const double split = superellipse::switch_abscissa(s.m);
  auto graph = [&](double t) {
    return std::pow(1.0 - std::pow(t, s.m), 1.0 / s.m);
  };
  double sum = 0.0;
  double x0 = s.a;
  double y0 = 0.0;
  auto add = [&](double x1, double y1) {
    sum += x0 * y1 - x1 * y0;
    x0 = x1;
    y0 = y1;
  };
  for (std::size_t i = 1; i <= count; ++i) {
    const double eta = split * static_cast<double>(i) / count;
    add(s.a * graph(eta), s.h * eta);
  }
  for (std::size_t i = count; i-- > 0;) {
    const double xi = split * static_cast<double>(i) / count;
    add(s.a * xi, s.h * graph(xi));
  }
  return 2.0 * sum;
}

}  // namespace

double enclosed_area(const LevelCurveFamily& family, double area) {
  // Romberg table on polygon areas with N, 2N, 4N, ... vertices.
  constexpr int kMaxLevels = 12;
  constexpr double kTolerance = 1e-11;
  const CurveShape s = family.shape(area);
  std::vector<std::vector<double>> table;
  std::size_t count = 64;
  for (int level = 0; level < kMaxLevels; ++level, count *= 2) {
    std::vector<double> row{polygon_area(s, count)};
    double factor = 4.0;
    for (int j = 1; j <= level && j <= 3; ++j, factor *= 4.0) {
      row.push_back(row[j - 1] + (row[j - 1] - table.back()[j - 1]) /
                                     (factor - 1.0));
    }
    if (level >= 2) {
      const double diff = std::abs(row.back() - table.back().back());
      if (diff <= kTolerance * area) return row.back();
    }
    table.push_back(std::move(row));
  }
  throw Error(ErrorCode::QuadratureNonConvergent,
              "polygon area refinements did not converge");
}

double enclosed_area(double area, const PackingParams& params) {
  require_area(area, params);
  return enclosed_area(LevelCurveFamily(params), area);
}

ShapeParams shape_schedule(double area, const PackingParams& params) {
  require_area(area, params);
  const CurveShape s = LevelCurveFamily(params).shape(area);
  return {s.h, s.a, s.m};
}

ChartPoint level_curve_point(double area, double phi,
                             const PackingParams& params) {
  require_area(area, params);
  if (!(phi >= 0.0 && phi < 1.0)) {
    throw Error(ErrorCode::PreconditionViolated, "phi must lie in [0, 1)");
  }
  return LevelCurveFamily(params).point(area, phi);
}

}  // namespace relpack
