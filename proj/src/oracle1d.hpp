#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

namespace tlgks {

// Plain first-order reference solver for the two-layer equations in one
// space dimension (planar or cylindrically symmetric). Deliberately simple
// and independent of the main scheme: local Lax-Friedrichs fluxes, centered
// bed and interlayer sources, explicit Euler substeps at CFL 0.45.
struct Problem1D {
  double x0 = 0.0, x1 = 1.0;
  double G = 9.81;
  double chi = 1.0;
  bool radial = false;  // x is a radius; adds the cylindrical geometry source
  // out: h1, u1, h2, u2 at coordinate x
  std::function<void(double, double* out4)> init;
  std::function<double(double)> bed;  // null: flat
};

struct Solution1D {
  std::vector<double> x;                       // cell centers
  std::vector<std::array<double, 4>> W;        // h1, hu1, h2, hu2
  double t = 0.0;
};

Solution1D oracle1d_run(const Problem1D& prob, int cells, double tEnd,
                        double cfl = 0.45);

// The 1-D reduction of a built-in 2-D case along its x axis (throws when the
// case has no 1-D reduction).
Problem1D oracle1d_problem_for_case(const std::string& caseName);

void write_oracle_csv(const std::string& path, const Solution1D& sol);

}  // namespace tlgks
