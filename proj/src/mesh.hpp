#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "geom.hpp"

namespace tlgks {

// Boundary condition tags carried on hull edges. Interior edges use kNone.
enum BoundaryTag : int {
  kNone = -1,
  kWall = 0,
  kFree = 1,
};

struct Edge {
  int a = -1, b = -1;       // node ids, directed so the left cell is CCW
  int left = -1;            // cell on the left of a->b (always set)
  int right = -1;           // cell on the right, -1 on the hull
  int tag = kNone;          // BoundaryTag on hull edges
  double length = 0.0;
  Vec2 normal;              // unit normal pointing from left to right
  std::array<Vec2, 2> gauss;  // two-point Gauss abscissae on the edge
};

// Unstructured triangular mesh with the connectivity and per-cell compact
// stencils the reconstruction needs. All ids are 0-based.
struct Mesh {
  std::vector<Vec2> node;
  std::vector<std::array<int, 3>> cell;  // CCW node triples
  std::vector<Edge> edge;

  std::vector<std::array<int, 3>> cellEdge;  // edge ids, local order follows node pairs (0,1),(1,2),(2,0)
  std::vector<std::array<int, 3>> cellSign;  // +1 where the cell is the edge's left cell
  std::vector<std::array<int, 3>> neighbor;  // face neighbors, -1 on the hull
  std::vector<double> area;
  std::vector<Vec2> centroid;

  // Compact stencil: the cell, its face neighbors, then the face neighbors'
  // face neighbors, deduplicated in first-seen order.
  std::vector<std::vector<int>> stencil;

  double shortestEdge = 0.0;

  int num_cells() const { return static_cast<int>(cell.size()); }
  int num_nodes() const { return static_cast<int>(node.size()); }
  int num_edges() const { return static_cast<int>(edge.size()); }
};

// Builds edges, geometry, stencils from node/cell lists and a hull tag list
// given as (nodeA, nodeB, tag) in either node order. Repairs clockwise cells,
// rejects non-manifold edges and untagged (or doubly claimed) hull edges.
Mesh build_mesh(std::vector<Vec2> nodes,
                std::vector<std::array<int, 3>> cells,
                const std::vector<std::array<int, 3>>& boundary);

// Structured triangulation of [x0,x1]x[y0,y1] with target spacing dx and
// alternating diagonals. sideTags order: left, right, bottom, top.
// keep: optional cell filter by centroid (carving holes); tagOverride:
// optional tag for hull edges not on the four domain sides (returns kNone to
// fall back to the nearest side's tag).
Mesh generate_structured(double x0, double x1, double y0, double y1,
                         double dx, std::array<int, 4> sideTags,
                         const std::function<bool(const Vec2&)>& keep = {},
                         const std::function<int(const Vec2&)>& tagOverride = {});

// TLGKS-MESH v1 ASCII round-trip.
Mesh load_mesh(const std::string& path);
void save_mesh(const Mesh& m, const std::string& path);

}  // namespace tlgks
