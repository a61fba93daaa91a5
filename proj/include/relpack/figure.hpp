#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "relpack/sigma.hpp"

namespace relpack {

/// One exported vertex: source point (q, p) at parameter t of its curve
/// and its image (Q, P).
struct FigureRow {
  int curve_id = 0;
  std::string kind;  // "circle" or "diameter"
  double t = 0.0;
  double q = 0.0;
  double p = 0.0;
  double Q = 0.0;
  double P = 0.0;
};

/// Images of the concentric circles u_j = (j/circles)^2 r^2,
/// j = 1..circles (ids 1..circles), each sampled at t = k/points,
/// k = 0..points so the last vertex closes the polyline, followed by the
/// diameter p = 0 from q = -r to q = r (id 0). The outermost circle and
/// the diameter ends are pulled in by a factor 1 - 1e-9 so every vertex
/// lies in the open disc.
std::vector<FigureRow> figure_rows(const DiscMap& map, int circles,
                                   int points_per_curve);

/// Header curve_id,kind,t,q,p,Q,P; 17 significant digits.
void write_csv(std::ostream& out, const std::vector<FigureRow>& rows);

/// Inverse of write_csv. Throws std::runtime_error on malformed input.
std::vector<FigureRow> read_csv(std::istream& in);

}  // namespace relpack
