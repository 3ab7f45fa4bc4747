#include "output.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "solver.hpp"

namespace tlgks {

namespace {

void put(std::ofstream& out, double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g\n", v);
  out << buf;
}

void scalar_section(std::ofstream& out, const char* name,
                    const std::vector<double>& v) {
  out << "SCALARS " << name << " double 1\nLOOKUP_TABLE default\n";
  for (double x : v) put(out, x);
}

}  // namespace

void write_vtk(const std::string& path, const Mesh& m, const Topography& topo,
               const std::vector<std::array<double, 3>>& lower,
               const std::vector<std::array<double, 3>>& upper, double hDry) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("vtk: cannot write '" + path + "'");
  const int nn = m.num_nodes(), nc = m.num_cells();

  out << "# vtk DataFile Version 3.0\n";
  out << "two-layer shallow water state\n";
  out << "ASCII\n";
  out << "DATASET UNSTRUCTURED_GRID\n";
  out << "POINTS " << nn << " double\n";
  char buf[96];
  for (const Vec2& p : m.node) {
    std::snprintf(buf, sizeof buf, "%.17g %.17g 0\n", p.x, p.y);
    out << buf;
  }
  out << "CELLS " << nc << " " << 4 * nc << "\n";
  for (const auto& c : m.cell) out << "3 " << c[0] << " " << c[1] << " " << c[2] << "\n";
  out << "CELL_TYPES " << nc << "\n";
  for (int j = 0; j < nc; ++j) out << "5\n";

  std::vector<double> f(nc);
  out << "CELL_DATA " << nc << "\n";
  auto vel = [hDry](const std::array<double, 3>& w, int comp) {
    return (w[0] > hDry) ? w[comp] / w[0] : 0.0;
  };
  for (int j = 0; j < nc; ++j) f[j] = lower[j][0];
  scalar_section(out, "h1", f);
  for (int j = 0; j < nc; ++j) f[j] = upper[j][0];
  scalar_section(out, "h2", f);
  for (int j = 0; j < nc; ++j) f[j] = topo.cellAvg[j] + lower[j][0];
  scalar_section(out, "eta1", f);
  for (int j = 0; j < nc; ++j) f[j] = (topo.cellAvg[j] + lower[j][0]) + upper[j][0];
  scalar_section(out, "eta2", f);
  for (int j = 0; j < nc; ++j) f[j] = vel(lower[j], 1);
  scalar_section(out, "u1", f);
  for (int j = 0; j < nc; ++j) f[j] = vel(lower[j], 2);
  scalar_section(out, "v1", f);
  for (int j = 0; j < nc; ++j) f[j] = vel(upper[j], 1);
  scalar_section(out, "u2", f);
  for (int j = 0; j < nc; ++j) f[j] = vel(upper[j], 2);
  scalar_section(out, "v2", f);
  scalar_section(out, "B", topo.cellAvg);
  if (!out) throw std::runtime_error("vtk: write failed for '" + path + "'");
}

std::vector<CenterlineRow> centerline_rows(const Mesh& m, const Topography& topo,
                                           const std::vector<std::array<double, 3>>& lower,
                                           const std::vector<std::array<double, 3>>& upper,
                                           double yMid, double band) {
  std::vector<CenterlineRow> rows;
  for (int j = 0; j < m.num_cells(); ++j) {
    if (std::abs(m.centroid[j].y - yMid) >= band) continue;
    CenterlineRow r;
    r.x = m.centroid[j].x;
    r.h1 = lower[j][0];
    r.h2 = upper[j][0];
    r.eta1 = topo.cellAvg[j] + r.h1;
    r.eta2 = r.eta1 + r.h2;
    r.hu1 = lower[j][1];
    r.hu2 = upper[j][1];
    rows.push_back(r);
  }
  std::sort(rows.begin(), rows.end(),
            [](const CenterlineRow& a, const CenterlineRow& b) { return a.x < b.x; });
  return rows;
}

void write_centerline_csv(const std::string& path,
                          const std::vector<CenterlineRow>& rows) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("csv: cannot write '" + path + "'");
  out << "x,h1,h2,eta1,eta2,hu1,hu2\n";
  char buf[256];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n",
                  r.x, r.h1, r.h2, r.eta1, r.eta2, r.hu1, r.hu2);
    out << buf;
  }
}

void append_conservation(const std::string& path, double t, const Diagnostics& d) {
  const bool fresh = !std::ifstream(path).good();
  std::ofstream out(path, std::ios::app);
  if (!out) throw std::runtime_error("csv: cannot write '" + path + "'");
  if (fresh) out << "t,mass1,mass2,momx1,momy1,momx2,momy2,clamped_mass\n";
  char buf[320];
  std::snprintf(buf, sizeof buf,
                "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", t,
                d.mass[0], d.mass[1], d.momentum[0][0], d.momentum[0][1],
                d.momentum[1][0], d.momentum[1][1], d.clampedMass);
  out << buf;
}

void write_error_report(const std::string& path, double t,
                        const std::array<double, 2>& l1) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("csv: cannot write '" + path + "'");
  out << "t,l1_h1,l1_h2\n";
  char buf[160];
  std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", t, l1[0], l1[1]);
  out << buf;
}

void dump_state_vtk(const Solver& s, const std::string& path) {
  write_vtk(path, s.mesh(), s.topo(), s.avg(0), s.avg(1), s.config().hDry);
}

void dump_centerline_csv(const Solver& s, const std::string& path) {
  const Mesh& m = s.mesh();
  double ylo = m.node[0].y, yhi = m.node[0].y;
  for (const Vec2& p : m.node) {
    ylo = std::min(ylo, p.y);
    yhi = std::max(yhi, p.y);
  }
  const double yMid = 0.5 * (ylo + yhi);
  double band = s.config().centerlineBand;
  if (!(band > 0.0)) band = 0.55 * m.shortestEdge;
  write_centerline_csv(path,
                       centerline_rows(m, s.topo(), s.avg(0), s.avg(1), yMid, band));
}

}  // namespace tlgks
