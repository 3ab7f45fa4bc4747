#include "mesh.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "quadrature.hpp"

namespace tlgks {

namespace {

std::string tag_name(int tag) {
  switch (tag) {
    case kWall: return "wall";
    case kFree: return "free";
    default: return "none";
  }
}

int tag_from_name(const std::string& s) {
  if (s == "wall") return kWall;
  if (s == "free") return kFree;
  throw std::runtime_error("mesh: unknown boundary tag '" + s + "'");
}

uint64_t pair_key(int a, int b) {
  const uint64_t lo = static_cast<uint64_t>(std::min(a, b));
  const uint64_t hi = static_cast<uint64_t>(std::max(a, b));
  return (hi << 32) | lo;
}

}  // namespace

Mesh build_mesh(std::vector<Vec2> nodes,
                std::vector<std::array<int, 3>> cells,
                const std::vector<std::array<int, 3>>& boundary) {
  Mesh m;
  m.node = std::move(nodes);
  m.cell = std::move(cells);

  const int nc = m.num_cells();
  const int nn = m.num_nodes();
  for (auto& c : m.cell) {
    for (int v : c) {
      if (v < 0 || v >= nn) throw std::runtime_error("mesh: cell node id out of range");
    }
    // Orientation repair: make every cell counter-clockwise.
    if (cross2(m.node[c[0]], m.node[c[1]], m.node[c[2]]) < 0.0) std::swap(c[1], c[2]);
    if (cross2(m.node[c[0]], m.node[c[1]], m.node[c[2]]) <= 0.0) {
      throw std::runtime_error("mesh: degenerate cell");
    }
  }

  m.cellEdge.assign(nc, {-1, -1, -1});
  m.cellSign.assign(nc, {0, 0, 0});
  m.neighbor.assign(nc, {-1, -1, -1});
  m.area.assign(nc, 0.0);
  m.centroid.assign(nc, Vec2{});

  std::map<uint64_t, int> edgeOf;
  for (int j = 0; j < nc; ++j) {
    const auto& c = m.cell[j];
    m.area[j] = 0.5 * cross2(m.node[c[0]], m.node[c[1]], m.node[c[2]]);
    m.centroid[j] = (m.node[c[0]] + m.node[c[1]] + m.node[c[2]]) * (1.0 / 3.0);
    for (int s = 0; s < 3; ++s) {
      const int a = c[s], b = c[(s + 1) % 3];
      auto it = edgeOf.find(pair_key(a, b));
      if (it == edgeOf.end()) {
        Edge e;
        e.a = a;
        e.b = b;
        e.left = j;
        const Vec2 d = m.node[b] - m.node[a];
        e.length = d.norm();
        e.normal = d.perp_right() * (1.0 / e.length);
        const EdgeGauss g = edge_gauss(m.node[a], m.node[b]);
        e.gauss = g.point;
        const int id = m.num_edges();
        m.edge.push_back(e);
        edgeOf.emplace(pair_key(a, b), id);
        m.cellEdge[j][s] = id;
        m.cellSign[j][s] = +1;
      } else {
        Edge& e = m.edge[it->second];
        if (e.right != -1) throw std::runtime_error("mesh: non-manifold edge");
        if (e.a == a) throw std::runtime_error("mesh: inconsistent cell orientation");
        e.right = j;
        m.cellEdge[j][s] = it->second;
        m.cellSign[j][s] = -1;
      }
    }
  }

  for (int j = 0; j < nc; ++j) {
    for (int s = 0; s < 3; ++s) {
      const Edge& e = m.edge[m.cellEdge[j][s]];
      m.neighbor[j][s] = (e.left == j) ? e.right : e.left;
    }
  }

  // Apply hull tags; every hull edge must be claimed exactly once.
  for (const auto& spec : boundary) {
    auto it = edgeOf.find(pair_key(spec[0], spec[1]));
    if (it == edgeOf.end()) throw std::runtime_error("mesh: boundary spec names a missing edge");
    Edge& e = m.edge[it->second];
    if (e.right != -1) throw std::runtime_error("mesh: boundary tag on an interior edge");
    if (e.tag != kNone) throw std::runtime_error("mesh: duplicate boundary tag");
    e.tag = spec[2];
  }
  for (const Edge& e : m.edge) {
    if (e.right == -1 && e.tag == kNone) {
      throw std::runtime_error("mesh: untagged hull edge");
    }
  }

  m.shortestEdge = m.edge.empty() ? 0.0 : m.edge[0].length;
  for (const Edge& e : m.edge) m.shortestEdge = std::min(m.shortestEdge, e.length);

  // Compact stencil in deterministic first-seen order.
  m.stencil.assign(nc, {});
  for (int j = 0; j < nc; ++j) {
    auto& st = m.stencil[j];
    st.push_back(j);
    auto add = [&st](int c) {
      if (c < 0) return;
      if (std::find(st.begin(), st.end(), c) == st.end()) st.push_back(c);
    };
    for (int s = 0; s < 3; ++s) add(m.neighbor[j][s]);
    for (int s = 0; s < 3; ++s) {
      const int nb = m.neighbor[j][s];
      if (nb < 0) continue;
      for (int t = 0; t < 3; ++t) add(m.neighbor[nb][t]);
    }
  }

  return m;
}

Mesh generate_structured(double x0, double x1, double y0, double y1,
                         double dx, std::array<int, 4> sideTags,
                         const std::function<bool(const Vec2&)>& keep,
                         const std::function<int(const Vec2&)>& tagOverride) {
  if (!(x1 > x0) || !(y1 > y0) || !(dx > 0.0)) {
    throw std::runtime_error("mesh: bad domain or spacing");
  }
  const int nx = std::max(1, static_cast<int>(std::lround((x1 - x0) / dx)));
  const int ny = std::max(1, static_cast<int>(std::lround((y1 - y0) / dx)));
  const double hx = (x1 - x0) / nx;
  const double hy = (y1 - y0) / ny;

  // Coordinates paired symmetrically about the domain center so a 180-degree
  // rotation maps nodes onto nodes exactly.
  std::vector<double> xs(nx + 1), ys(ny + 1);
  for (int i = 0; i <= nx / 2; ++i) {
    xs[i] = x0 + i * hx;
    xs[nx - i] = (x0 + x1) - xs[i];
  }
  for (int j = 0; j <= ny / 2; ++j) {
    ys[j] = y0 + j * hy;
    ys[ny - j] = (y0 + y1) - ys[j];
  }

  std::vector<Vec2> nodes((nx + 1) * (ny + 1));
  auto nid = [nx](int i, int j) { return j * (nx + 1) + i; };
  for (int j = 0; j <= ny; ++j) {
    for (int i = 0; i <= nx; ++i) nodes[nid(i, j)] = {xs[i], ys[j]};
  }

  std::vector<std::array<int, 3>> cells;
  cells.reserve(2 * static_cast<size_t>(nx) * ny);
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) {
      const int n00 = nid(i, j), n10 = nid(i + 1, j);
      const int n01 = nid(i, j + 1), n11 = nid(i + 1, j + 1);
      std::array<std::array<int, 3>, 2> tri;
      if (((i + j) & 1) == 0) {
        tri = {{{n00, n10, n11}, {n00, n11, n01}}};
      } else {
        tri = {{{n00, n10, n01}, {n10, n11, n01}}};
      }
      for (const auto& t : tri) {
        if (keep) {
          const Vec2 c = (nodes[t[0]] + nodes[t[1]] + nodes[t[2]]) * (1.0 / 3.0);
          if (!keep(c)) continue;
        }
        cells.push_back(t);
      }
    }
  }
  if (cells.empty()) throw std::runtime_error("mesh: filter removed every cell");

  // Drop unused nodes, then tag the hull by side (or override).
  std::vector<int> remap(nodes.size(), -1);
  std::vector<Vec2> usedNodes;
  for (auto& c : cells) {
    for (int& v : c) {
      if (remap[v] < 0) {
        remap[v] = static_cast<int>(usedNodes.size());
        usedNodes.push_back(nodes[v]);
      }
      v = remap[v];
    }
  }

  // Collect hull edges by counting undirected incidences.
  std::map<uint64_t, std::array<int, 3>> count;  // key -> (a, b, count)
  for (const auto& c : cells) {
    for (int s = 0; s < 3; ++s) {
      const int a = c[s], b = c[(s + 1) % 3];
      auto [it, fresh] = count.try_emplace(pair_key(a, b), std::array<int, 3>{a, b, 0});
      it->second[2]++;
    }
  }
  std::vector<std::array<int, 3>> boundary;
  const double tol = 1e-9 * std::max(x1 - x0, y1 - y0);
  for (const auto& [key, abn] : count) {
    if (abn[2] != 1) continue;
    const Vec2 mid = (usedNodes[abn[0]] + usedNodes[abn[1]]) * 0.5;
    int tag = kNone;
    if (tagOverride) tag = tagOverride(mid);
    if (tag == kNone) {
      if (std::abs(mid.x - x0) < tol) tag = sideTags[0];
      else if (std::abs(mid.x - x1) < tol) tag = sideTags[1];
      else if (std::abs(mid.y - y0) < tol) tag = sideTags[2];
      else if (std::abs(mid.y - y1) < tol) tag = sideTags[3];
      else throw std::runtime_error("mesh: interior hull edge left untagged");
    }
    boundary.push_back({abn[0], abn[1], tag});
  }

  return build_mesh(std::move(usedNodes), std::move(cells), boundary);
}

Mesh load_mesh(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("mesh: cannot open '" + path + "'");

  auto next_line = [&in](std::string& out) -> bool {
    std::string line;
    while (std::getline(in, line)) {
      const auto h = line.find('#');
      if (h != std::string::npos) line.erase(h);
      size_t p = line.find_first_not_of(" \t\r\n");
      if (p == std::string::npos) continue;
      out = line;
      return true;
    }
    return false;
  };

  std::string line;
  if (!next_line(line)) throw std::runtime_error("mesh: empty file");
  {
    std::istringstream ss(line);
    std::string magic, ver;
    ss >> magic >> ver;
    if (magic != "TLGKS-MESH" || ver != "v1") {
      throw std::runtime_error("mesh: bad header, expected 'TLGKS-MESH v1'");
    }
  }

  auto expect_count = [&](const char* word) -> int {
    std::string l;
    if (!next_line(l)) throw std::runtime_error(std::string("mesh: missing '") + word + "' section");
    std::istringstream ss(l);
    std::string w;
    long n = -1;
    ss >> w >> n;
    if (w != word || n < 0) throw std::runtime_error(std::string("mesh: bad '") + word + "' section header");
    return static_cast<int>(n);
  };

  const int nn = expect_count("nodes");
  std::vector<Vec2> nodes(nn);
  for (int i = 0; i < nn; ++i) {
    if (!next_line(line)) throw std::runtime_error("mesh: truncated node list");
    std::istringstream ss(line);
    if (!(ss >> nodes[i].x >> nodes[i].y)) throw std::runtime_error("mesh: bad node line");
  }

  const int nc = expect_count("cells");
  std::vector<std::array<int, 3>> cells(nc);
  for (int i = 0; i < nc; ++i) {
    if (!next_line(line)) throw std::runtime_error("mesh: truncated cell list");
    std::istringstream ss(line);
    if (!(ss >> cells[i][0] >> cells[i][1] >> cells[i][2])) throw std::runtime_error("mesh: bad cell line");
  }

  const int nb = expect_count("boundary");
  std::vector<std::array<int, 3>> boundary(nb);
  for (int i = 0; i < nb; ++i) {
    if (!next_line(line)) throw std::runtime_error("mesh: truncated boundary list");
    std::istringstream ss(line);
    std::string tag;
    if (!(ss >> boundary[i][0] >> boundary[i][1] >> tag)) throw std::runtime_error("mesh: bad boundary line");
    boundary[i][2] = tag_from_name(tag);
  }

  return build_mesh(std::move(nodes), std::move(cells), boundary);
}

void save_mesh(const Mesh& m, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("mesh: cannot write '" + path + "'");
  out << "TLGKS-MESH v1\n";
  out << "nodes " << m.num_nodes() << "\n";
  char buf[96];
  for (const Vec2& p : m.node) {
    std::snprintf(buf, sizeof buf, "%.17g %.17g\n", p.x, p.y);
    out << buf;
  }
  out << "cells " << m.num_cells() << "\n";
  for (const auto& c : m.cell) out << c[0] << " " << c[1] << " " << c[2] << "\n";
  int nb = 0;
  for (const Edge& e : m.edge) nb += (e.right == -1);
  out << "boundary " << nb << "\n";
  for (const Edge& e : m.edge) {
    if (e.right == -1) out << e.a << " " << e.b << " " << tag_name(e.tag) << "\n";
  }
  if (!out) throw std::runtime_error("mesh: write failed for '" + path + "'");
}

}  // namespace tlgks
