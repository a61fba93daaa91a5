#include "relpack/figure.hpp"

#include <cmath>
#include <istream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "relpack/errors.hpp"

namespace relpack {
namespace {

constexpr double kInset = 1.0 - 1e-9;

}  // namespace

std::vector<FigureRow> figure_rows(const DiscMap& map, int circles,
                                   int points_per_curve) {
  if (circles < 1 || points_per_curve < 3) {
    throw Error(ErrorCode::PreconditionViolated,
                "need circles >= 1 and points_per_curve >= 3");
  }
  const double r = map.params().r();
  std::vector<FigureRow> rows;
  rows.reserve(static_cast<std::size_t>(circles + 1) * (points_per_curve + 1));

  auto push = [&](int id, const char* kind, double t, double q, double p) {
    const ChartPoint w = map.evaluate({q, p});
    rows.push_back({id, kind, t, q, p, w.Q, w.P});
  };

  for (int j = 1; j <= circles; ++j) {
    const double rho = r * j / circles * (j == circles ? kInset : 1.0);
    for (int k = 0; k <= points_per_curve; ++k) {
      const double t = static_cast<double>(k) / points_per_curve;
      // k == points_per_curve repeats the first vertex exactly.
      const double angle = 2.0 * std::numbers::pi * (k % points_per_curve) /
                           points_per_curve;
      push(j, "circle", t, rho * std::cos(angle), rho * std::sin(angle));
    }
  }
  const double half = r * kInset;
  for (int k = 0; k <= points_per_curve; ++k) {
    const double t = static_cast<double>(k) / points_per_curve;
    push(0, "diameter", t, -half + 2.0 * half * t, 0.0);
  }
  return rows;
}

void write_csv(std::ostream& out, const std::vector<FigureRow>& rows) {
  const auto precision = out.precision(17);
  out << "curve_id,kind,t,q,p,Q,P\n";
  for (const FigureRow& row : rows) {
    out << row.curve_id << ',' << row.kind << ',' << row.t << ',' << row.q
        << ',' << row.p << ',' << row.Q << ',' << row.P << '\n';
  }
  out.precision(precision);
}

std::vector<FigureRow> read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != "curve_id,kind,t,q,p,Q,P") {
    throw std::runtime_error("missing figure CSV header");
  }
  std::vector<FigureRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string id, kind, t, q, p, Q, P;
    if (!std::getline(fields, id, ',') || !std::getline(fields, kind, ',') ||
        !std::getline(fields, t, ',') || !std::getline(fields, q, ',') ||
        !std::getline(fields, p, ',') || !std::getline(fields, Q, ',') ||
        !std::getline(fields, P)) {
      throw std::runtime_error("malformed figure CSV row: " + line);
    }
    rows.push_back({std::stoi(id), kind, std::stod(t), std::stod(q),
                    std::stod(p), std::stod(Q), std::stod(P)});
  }
  return rows;
}

}  // namespace relpack
