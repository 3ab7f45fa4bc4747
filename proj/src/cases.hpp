#pragma once

#include <functional>
#include <string>
#include <vector>

#include "config.hpp"
#include "geom.hpp"
#include "mesh.hpp"

namespace tlgks {

// A built-in flow problem: defaults, bed, initial state, optional analytic
// solution and custom mesh geometry. The init callback receives the
// piecewise-linear bed value at the evaluation point so depths defined
// relative to the bed stay exact on the discrete topography.
struct CaseDef {
  std::string name;
  bool discontinuous = false;
  bool hasAnalytic = false;
  Config defaults;
  std::function<double(const Vec2&)> bed;  // null: flat bottom
  // out: h1, u1, v1, h2, u2, v2
  std::function<void(const Vec2&, double bTilde, double* out6)> init;
  // out: h1, h2 at time t (only when hasAnalytic)
  std::function<void(const Vec2&, double t, double* out2)> analytic;
  // custom geometry (irregular domains); null: rectangle from defaults
  std::function<Mesh(const Config&)> makeMesh;
};

const CaseDef& find_case(const std::string& name);
std::vector<std::string> case_names();

}  // namespace tlgks
