#pragma once

#include <array>
#include <string>

#include "mesh.hpp"

namespace tlgks {

struct Config {
  std::string caseName = "custom";

  // mesh
  std::string meshMode = "generate";  // "generate" | "file"
  double x0 = 0.0, x1 = 1.0, y0 = 0.0, y1 = 1.0;
  double dx = 0.1;
  std::string meshPath;

  // physics
  double G = 9.81;
  double chi = 1.0;  // density ratio rho_upper / rho_lower, in (0, 1]

  // numerics
  double cfl = 0.5;
  double tEnd = 1.0;
  double epsTau = 0.05;      // relaxation floor, in units of dt
  double cNum = 5.0;         // depth-jump relaxation penalty
  double hMin = 1e-8;        // positivity floor
  double hDry = 1e-6;        // below this a layer is treated as dry
  double velScale = 1.0;     // velocity scale in the upwind blend

  // boundaries: left, right, bottom, top
  std::array<int, 4> bc{kWall, kWall, kWall, kWall};

  // output
  std::string outDir;
  double outInterval = 0.0;      // 0: final state only
  double centerlineBand = 0.0;   // 0: auto (just over half a cell)
};

// Parses the JSON config file; a "case" key pulls that case's defaults first,
// then explicit keys override them.
Config config_from_json(const std::string& path);

// Case defaults by name (throws on unknown names).
Config config_for_case(const std::string& name);

void validate_config(const Config& c);

int bc_from_string(const std::string& s);
std::string bc_to_string(int tag);

}  // namespace tlgks
