#include "topo.hpp"

#include <cmath>
#include <stdexcept>

namespace tlgks {

Topography Topography::build(const Mesh& m,
                             const std::function<double(const Vec2&)>& bed) {
  Topography t;
  t.nodeB.resize(m.num_nodes());
  for (int i = 0; i < m.num_nodes(); ++i) t.nodeB[i] = bed ? bed(m.node[i]) : 0.0;

  t.cellAvg.resize(m.num_cells());
  t.cellGrad.resize(m.num_cells());
  for (int j = 0; j < m.num_cells(); ++j) {
    const auto& c = m.cell[j];
    const double b0 = t.nodeB[c[0]], b1 = t.nodeB[c[1]], b2 = t.nodeB[c[2]];
    t.cellAvg[j] = (b0 + b1 + b2) / 3.0;
    const Vec2 &p0 = m.node[c[0]], &p1 = m.node[c[1]], &p2 = m.node[c[2]];
    const double twoA = cross2(p0, p1, p2);
    t.cellGrad[j] = {(b0 * (p1.y - p2.y) + b1 * (p2.y - p0.y) + b2 * (p0.y - p1.y)) / twoA,
                     (b0 * (p2.x - p1.x) + b1 * (p0.x - p2.x) + b2 * (p1.x - p0.x)) / twoA};
  }

  // Edge values interpolated along the edge itself: identical from both
  // sides by construction.
  t.edgeB.resize(m.num_edges());
  const double s = 0.5 / std::sqrt(3.0);
  for (int e = 0; e < m.num_edges(); ++e) {
    const double ba = t.nodeB[m.edge[e].a], bb = t.nodeB[m.edge[e].b];
    const double mid = 0.5 * (ba + bb), half = (bb - ba) * s;
    t.edgeB[e] = {mid - half, mid + half};
  }
  return t;
}

Vec2 plane_slope(const Mesh& m, int j, const std::array<double, 3>& edgeCenterVal) {
  // Edge midpoints of a triangle are affinely independent, so the plane is
  // exactly determined.
  const auto& c = m.cell[j];
  const Vec2 q0 = (m.node[c[0]] + m.node[c[1]]) * 0.5;
  const Vec2 q1 = (m.node[c[1]] + m.node[c[2]]) * 0.5;
  const Vec2 q2 = (m.node[c[2]] + m.node[c[0]]) * 0.5;
  const double a11 = q1.x - q0.x, a12 = q1.y - q0.y;
  const double a21 = q2.x - q0.x, a22 = q2.y - q0.y;
  const double det = a11 * a22 - a12 * a21;
  if (det == 0.0) throw std::runtime_error("topo: degenerate cell in plane fit");
  const double r1 = edgeCenterVal[1] - edgeCenterVal[0];
  const double r2 = edgeCenterVal[2] - edgeCenterVal[0];
  return {(a22 * r1 - a12 * r2) / det, (-a21 * r1 + a11 * r2) / det};
}

}  // namespace tlgks
