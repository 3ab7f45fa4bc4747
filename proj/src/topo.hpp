#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <vector>

#include "geom.hpp"
#include "mesh.hpp"

namespace tlgks {

// Bed elevation carried as the continuous piecewise-linear interpolant of
// nodal samples. All bed quantities the scheme touches (cell mean, cell
// gradient, edge quadrature values) come from this interpolant, so the
// pressure flux and the bed source telescope exactly in the discrete
// divergence theorem and still water stays still to round-off.
struct Topography {
  std::vector<double> nodeB;
  std::vector<double> cellAvg;
  std::vector<Vec2> cellGrad;
  std::vector<std::array<double, 2>> edgeB;  // at the two edge Gauss points

  static Topography build(const Mesh& m, const std::function<double(const Vec2&)>& bed);
};

// Upwind blend factor for single-valued interface depths: 1/2 erfc of the
// mean normal velocity (scaled); ~1 for strong left-to-right transport,
// ~0 for the reverse, exactly 1/2 at rest.
inline double upwind_blend(double UnL, double UnR, double velScale) {
  return 0.5 * std::erfc(-0.5 * (UnL + UnR) / velScale);
}

// Gradient of the plane through the three edge-center values of a cell.
Vec2 plane_slope(const Mesh& m, int j, const std::array<double, 3>& edgeCenterVal);

// Weight for blending a side's reconstructed partner-layer slope with the
// neighbor cell's plane slope; drops toward the plane model across jumps.
inline double blend_weight(double hl, double hr) {
  const double d = std::abs(hl - hr) / (std::abs(hl) + std::abs(hr) + 1e-12);
  const double s = 100.0 * d;
  return 1.0 / (1.0 + s * s);
}

}  // namespace tlgks
