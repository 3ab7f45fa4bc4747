#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <utility>

#include "geom.hpp"
#include "mesh.hpp"

using namespace tlgks;

namespace {

Mesh unit_grid(double dx = 0.25) {
  return generate_structured(0.0, 1.0, 0.0, 1.0, dx,
                             {kWall, kWall, kWall, kWall});
}

double signed_area(const Mesh& m, int j) {
  const auto& c = m.cell[j];
  return 0.5 * cross2(m.node[c[0]], m.node[c[1]], m.node[c[2]]);
}

}  // namespace

TEST_CASE("structured generator counts and geometry") {
  const Mesh m = unit_grid();
  CHECK(m.num_nodes() == 25);
  CHECK(m.num_cells() == 32);
  CHECK(m.num_edges() == 56);
  CHECK(m.shortestEdge == 0.25);

  double total = 0.0;
  for (int j = 0; j < m.num_cells(); ++j) {
    const double a = signed_area(m, j);
    CHECK(a > 0.0);  // CCW after repair
    CHECK(m.area[j] == doctest::Approx(a).epsilon(1e-15));
    total += a;
  }
  CHECK(total == doctest::Approx(1.0).epsilon(1e-14));

  int hull = 0;
  for (const Edge& e : m.edge) {
    CHECK(e.length > 0.0);
    CHECK(std::abs(e.normal.norm() - 1.0) < 1e-14);
    if (e.right == -1) {
      ++hull;
      CHECK(e.tag == kWall);
      // Outward: from the left centroid toward the edge.
      const Vec2 mid = 0.5 * (m.node[e.a] + m.node[e.b]);
      CHECK(e.normal.dot(mid - m.centroid[e.left]) > 0.0);
    } else {
      CHECK(e.tag == kNone);
      CHECK(e.normal.dot(m.centroid[e.right] - m.centroid[e.left]) > 0.0);
    }
    // Two-point Gauss abscissae lie on the segment.
    for (const Vec2& g : e.gauss) {
      const Vec2 d = m.node[e.b] - m.node[e.a];
      const Vec2 r = g - m.node[e.a];
      CHECK(std::abs(cross2(m.node[e.a], m.node[e.b], g)) < 1e-14);
      const double s = r.dot(d) / d.dot(d);
      CHECK(s > 0.0);
      CHECK(s < 1.0);
    }
  }
  CHECK(hull == 16);
}

TEST_CASE("cell edge incidence closes each cell") {
  const Mesh m = unit_grid(0.2);
  for (int j = 0; j < m.num_cells(); ++j) {
    Vec2 sum{0.0, 0.0};
    for (int f = 0; f < 3; ++f) {
      const Edge& e = m.edge[m.cellEdge[j][f]];
      const double sgn = m.cellSign[j][f];
      CHECK(((sgn == 1.0 && e.left == j) || (sgn == -1.0 && e.right == j)));
      sum += (sgn * e.length) * e.normal;
      // neighbor must be the cell across this edge
      const int nb = (e.left == j) ? e.right : e.left;
      CHECK(m.neighbor[j][f] == nb);
    }
    CHECK(std::abs(sum.x) < 1e-14);
    CHECK(std::abs(sum.y) < 1e-14);
  }
}

TEST_CASE("compact stencils start at the cell and are deduplicated") {
  const Mesh m = unit_grid(0.125);
  int interiorSeen = 0;
  for (int j = 0; j < m.num_cells(); ++j) {
    const auto& st = m.stencil[j];
    REQUIRE(!st.empty());
    CHECK(st[0] == j);
    for (size_t a = 0; a < st.size(); ++a) {
      for (size_t b = a + 1; b < st.size(); ++b) CHECK(st[a] != st[b]);
    }
    bool interior = true;
    for (int f = 0; f < 3; ++f) interior = interior && m.neighbor[j][f] >= 0;
    if (interior) {
      ++interiorSeen;
      CHECK(st.size() >= 7);  // enough rows for a quadratic everywhere inside
      for (int f = 0; f < 3; ++f) {
        CHECK(std::find(st.begin(), st.end(), m.neighbor[j][f]) != st.end());
      }
    }
  }
  CHECK(interiorSeen > 0);
}

TEST_CASE("generator is deterministic") {
  const Mesh a = unit_grid(0.1);
  const Mesh b = unit_grid(0.1);
  REQUIRE(a.num_cells() == b.num_cells());
  REQUIRE(a.num_edges() == b.num_edges());
  for (int i = 0; i < a.num_nodes(); ++i) {
    CHECK(a.node[i].x == b.node[i].x);
    CHECK(a.node[i].y == b.node[i].y);
  }
  for (int j = 0; j < a.num_cells(); ++j) {
    CHECK(a.cell[j] == b.cell[j]);
    CHECK(a.stencil[j] == b.stencil[j]);
  }
}

TEST_CASE("node coordinates support exact 180 degree rotation") {
  // Even cell counts per side map the alternating diagonals onto themselves.
  const Mesh m = generate_structured(0.0, 10.0, 0.0, 10.0, 0.5,
                                     {kFree, kFree, kFree, kFree});
  auto key = [](const Vec2& p) {
    return std::pair<long long, long long>{std::llround(p.x * 1e7),
                                           std::llround(p.y * 1e7)};
  };
  std::map<std::pair<long long, long long>, int> byCoord;
  for (int j = 0; j < m.num_cells(); ++j) {
    byCoord[key(m.centroid[j])] = j;
  }
  REQUIRE(byCoord.size() == static_cast<size_t>(m.num_cells()));
  for (int j = 0; j < m.num_cells(); ++j) {
    const Vec2 rot{10.0 - m.centroid[j].x, 10.0 - m.centroid[j].y};
    const auto it = byCoord.find(key(rot));
    REQUIRE(it != byCoord.end());
    const int k = it->second;
    // Coordinates are built symmetrically, so the match is exact to rounding.
    CHECK(std::abs(m.centroid[k].x - rot.x) < 1e-13);
    CHECK(std::abs(m.centroid[k].y - rot.y) < 1e-13);
    CHECK(m.area[k] == doctest::Approx(m.area[j]).epsilon(1e-14));
  }
}

TEST_CASE("keep filter carves holes and tags the new hull") {
  const Mesh m = generate_structured(
      0.0, 1.0, 0.0, 1.0, 0.1, {kWall, kWall, kWall, kWall},
      [](const Vec2& c) { return !(c.x > 0.4 && c.x < 0.6 && c.y > 0.4 && c.y < 0.6); },
      [](const Vec2&) { return kWall; });
  CHECK(m.num_cells() < 200);
  CHECK(m.num_cells() > 100);
  for (const Edge& e : m.edge) {
    if (e.right == -1) CHECK(e.tag == kWall);
  }
}

TEST_CASE("mesh file round trip") {
  const Mesh a = generate_structured(0.0, 2.0, 0.0, 1.0, 0.3,
                                     {kWall, kFree, kWall, kFree});
  const char* path = "roundtrip.mesh";
  save_mesh(a, path);
  const Mesh b = load_mesh(path);
  std::remove(path);

  REQUIRE(a.num_nodes() == b.num_nodes());
  REQUIRE(a.num_cells() == b.num_cells());
  REQUIRE(a.num_edges() == b.num_edges());
  for (int i = 0; i < a.num_nodes(); ++i) {
    CHECK(a.node[i].x == b.node[i].x);  // %.17g keeps doubles exact
    CHECK(a.node[i].y == b.node[i].y);
  }
  for (int j = 0; j < a.num_cells(); ++j) {
    CHECK(a.cell[j] == b.cell[j]);
    CHECK(a.area[j] == b.area[j]);
  }
  int tags[2] = {0, 0}, tagsB[2] = {0, 0};
  for (const Edge& e : a.edge) {
    if (e.right == -1) ++tags[e.tag];
  }
  for (const Edge& e : b.edge) {
    if (e.right == -1) ++tagsB[e.tag];
  }
  CHECK(tags[0] == tagsB[0]);
  CHECK(tags[1] == tagsB[1]);
}

TEST_CASE("mesh loader rejects malformed input") {
  CHECK_THROWS(load_mesh("does_not_exist.mesh"));
  const char* path = "bad.mesh";
  {
    std::FILE* f = std::fopen(path, "w");
    std::fputs("NOT-A-MESH\n", f);
    std::fclose(f);
  }
  CHECK_THROWS(load_mesh(path));
  std::remove(path);
}

TEST_CASE("builder repairs clockwise cells") {
  std::vector<Vec2> nodes = {{0, 0}, {1, 0}, {0.5, 1}};
  const Mesh m = build_mesh(nodes, {{0, 2, 1}},
                            {{0, 1, kWall}, {1, 2, kWall}, {2, 0, kWall}});
  CHECK(signed_area(m, 0) > 0.0);
}

TEST_CASE("builder rejects broken topology") {
  std::vector<Vec2> nodes = {{0, 0}, {1, 0}, {0.5, 1}, {0.5, 2}};
  // Two CCW cells claiming the same directed edge.
  CHECK_THROWS(build_mesh(nodes, {{0, 1, 2}, {0, 1, 3}},
                          {{0, 1, kWall}, {1, 2, kWall}, {2, 0, kWall}}));
  // Degenerate (zero area) cell.
  std::vector<Vec2> flat = {{0, 0}, {1, 0}, {2, 0}};
  CHECK_THROWS(build_mesh(flat, {{0, 1, 2}}, {}));
  // Untagged hull edge.
  std::vector<Vec2> tri = {{0, 0}, {1, 0}, {0.5, 1}};
  CHECK_THROWS(build_mesh(tri, {{0, 1, 2}}, {{0, 1, kWall}, {1, 2, kWall}}));
  // Tag on an interior edge.
  std::vector<Vec2> quad = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  CHECK_THROWS(build_mesh(quad, {{0, 1, 2}, {0, 2, 3}},
                          {{0, 1, kWall}, {1, 2, kWall}, {2, 3, kWall},
                           {3, 0, kWall}, {0, 2, kWall}}));
  // Duplicate tag.
  CHECK_THROWS(build_mesh(tri, {{0, 1, 2}},
                          {{0, 1, kWall}, {1, 2, kWall}, {2, 0, kWall},
                           {0, 1, kFree}}));
  // Bad domain.
  CHECK_THROWS(generate_structured(1.0, 0.0, 0.0, 1.0, 0.1,
                                   {kWall, kWall, kWall, kWall}));
}
