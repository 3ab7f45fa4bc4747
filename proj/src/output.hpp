#pragma once

#include <array>
#include <string>
#include <vector>

#include "mesh.hpp"
#include "topo.hpp"

namespace tlgks {

struct Diagnostics;
class Solver;

// Legacy ASCII VTK with per-cell scalars h1, h2, eta1, eta2, u1, v1, u2, v2,
// B. eta2 is written as eta1 + h2 so the two level fields stay consistent to
// the digit.
void write_vtk(const std::string& path, const Mesh& m, const Topography& topo,
               const std::vector<std::array<double, 3>>& lower,
               const std::vector<std::array<double, 3>>& upper, double hDry);

struct CenterlineRow {
  double x, h1, h2, eta1, eta2, hu1, hu2;
};

// Cells whose centroid lies within band of yMid, sorted by centroid x.
std::vector<CenterlineRow> centerline_rows(const Mesh& m, const Topography& topo,
                                           const std::vector<std::array<double, 3>>& lower,
                                           const std::vector<std::array<double, 3>>& upper,
                                           double yMid, double band);

void write_centerline_csv(const std::string& path,
                          const std::vector<CenterlineRow>& rows);

void append_conservation(const std::string& path, double t, const Diagnostics& d);

void write_error_report(const std::string& path, double t,
                        const std::array<double, 2>& l1);

}  // namespace tlgks
