#include "cases.hpp"

#include <cmath>
#include <stdexcept>

namespace tlgks {

namespace {

std::vector<CaseDef> build_registry() {
  std::vector<CaseDef> reg;

  // Smooth translating perturbation with a flat free surface; with equal
  // layer densities both layers advect unchanged at the uniform velocity,
  // giving an exact reference solution.
  {
    CaseDef c;
    c.name = "accuracy";
    c.hasAnalytic = true;
    c.defaults.caseName = c.name;
    c.defaults.x0 = 0.0; c.defaults.x1 = 2.0;
    c.defaults.y0 = 0.0; c.defaults.y1 = 2.0;
    c.defaults.dx = 0.125;
    c.defaults.G = 9.81;
    c.defaults.chi = 1.0;
    c.defaults.tEnd = 0.1;
    c.defaults.bc = {kFree, kFree, kFree, kFree};
    c.init = [](const Vec2& p, double, double* w) {
      const double r2 = (p.x - 1.0) * (p.x - 1.0) + (p.y - 1.0) * (p.y - 1.0);
      const double h1 = 0.9 + 0.02 * std::exp(-50.0 * r2);
      w[0] = h1; w[1] = 1.0; w[2] = 1.0;
      w[3] = 1.0 - h1; w[4] = 1.0; w[5] = 1.0;
    };
    c.analytic = [](const Vec2& p, double t, double* w) {
      const double x = p.x - t, y = p.y - t;
      const double r2 = (x - 1.0) * (x - 1.0) + (y - 1.0) * (y - 1.0);
      const double h1 = 0.9 + 0.02 * std::exp(-50.0 * r2);
      w[0] = h1;
      w[1] = 1.0 - h1;
    };
    reg.push_back(std::move(c));
  }

  // Still water over a smooth hump; the exact solution is the initial state.
  {
    CaseDef c;
    c.name = "wellbalanced";
    c.defaults.caseName = c.name;
    c.defaults.x0 = 0.0; c.defaults.x1 = 2.0;
    c.defaults.y0 = 0.0; c.defaults.y1 = 2.0;
    c.defaults.dx = 0.1;
    c.defaults.G = 9.81;
    c.defaults.chi = 0.98;
    c.defaults.tEnd = 10.0;
    c.defaults.bc = {kWall, kWall, kWall, kWall};
    c.bed = [](const Vec2& p) {
      const double r2 = (p.x - 1.0) * (p.x - 1.0) + (p.y - 1.0) * (p.y - 1.0);
      return 0.5 * std::exp(-50.0 * r2);
    };
    c.init = [](const Vec2&, double b, double* w) {
      w[0] = 0.8 - b; w[1] = 0.0; w[2] = 0.0;
      w[3] = 0.2; w[4] = 0.0; w[5] = 0.0;
    };
    reg.push_back(std::move(c));
  }

  // Co-moving two-layer Riemann problem: small internal jump swept
  // downstream at speed 2.5 in both layers.
  {
    CaseDef c;
    c.name = "riemann1";
    c.discontinuous = true;
    c.defaults.caseName = c.name;
    c.defaults.x0 = 0.0; c.defaults.x1 = 1.0;
    c.defaults.y0 = 0.0; c.defaults.y1 = 0.5;
    c.defaults.dx = 0.01;
    c.defaults.G = 10.0;
    c.defaults.chi = 0.98;
    c.defaults.tEnd = 0.1;
    c.defaults.bc = {kFree, kFree, kWall, kWall};
    c.init = [](const Vec2& p, double, double* w) {
      const bool left = p.x < 0.3;
      const double h1 = left ? 0.5 : 0.55;
      const double h2 = left ? 0.5 : 0.45;
      w[0] = h1; w[1] = 2.5; w[2] = 0.0;
      w[3] = h2; w[4] = 2.5; w[5] = 0.0;
    };
    reg.push_back(std::move(c));
  }

  // Exchange Riemann problem: opposed layer depths with large internal jumps.
  {
    CaseDef c;
    c.name = "riemann2";
    c.discontinuous = true;
    c.defaults.caseName = c.name;
    c.defaults.x0 = 0.0; c.defaults.x1 = 10.0;
    c.defaults.y0 = 0.0; c.defaults.y1 = 1.0;
    c.defaults.dx = 0.025;
    c.defaults.G = 9.81;
    c.defaults.chi = 0.98;
    c.defaults.tEnd = 1.0;
    c.defaults.bc = {kFree, kFree, kWall, kWall};
    c.init = [](const Vec2& p, double, double* w) {
      const bool left = p.x < 5.0;
      w[0] = left ? 0.2 : 1.8; w[1] = 0.0; w[2] = 0.0;
      w[3] = left ? 1.8 : 0.2; w[4] = 0.0; w[5] = 0.0;
    };
    reg.push_back(std::move(c));
  }

  // Upper-layer dam break over a uniform lower layer.
  {
    CaseDef c;
    c.name = "dambreak";
    c.discontinuous = true;
    c.defaults.caseName = c.name;
    c.defaults.x0 = 0.0; c.defaults.x1 = 1.0;
    c.defaults.y0 = 0.0; c.defaults.y1 = 0.5;
    c.defaults.dx = 0.01;
    c.defaults.G = 9.81;
    c.defaults.chi = 1.0;
    c.defaults.tEnd = 0.08;
    c.defaults.bc = {kFree, kFree, kWall, kWall};
    c.defaults.hMin = 1e-8;
    c.init = [](const Vec2& p, double, double* w) {
      w[0] = 0.357; w[1] = 0.0; w[2] = 0.0;
      w[3] = (p.x < 0.5) ? 1.0 : 0.0; w[4] = 0.0; w[5] = 0.0;
    };
    reg.push_back(std::move(c));
  }

  // Smooth counter-flowing channel over a hump.
  {
    CaseDef c;
    c.name = "channel";
    c.defaults.caseName = c.name;
    c.defaults.x0 = 0.0; c.defaults.x1 = 1.0;
    c.defaults.y0 = 0.0; c.defaults.y1 = 0.25;
    c.defaults.dx = 0.005;
    c.defaults.G = 9.81;
    c.defaults.chi = 0.98;
    c.defaults.tEnd = 1.0;
    c.defaults.bc = {kFree, kFree, kWall, kWall};
    c.bed = [](const Vec2& p) {
      const double d = p.x - 0.5;
      return 0.5 * std::exp(-100.0 * d * d);
    };
    c.init = [](const Vec2&, double b, double* w) {
      w[0] = 0.8 - b; w[1] = -0.2; w[2] = 0.0;
      w[3] = 0.4; w[4] = 0.15; w[5] = 0.0;
    };
    reg.push_back(std::move(c));
  }

  // Cylindrical internal dam break; the solution stays rotationally
  // symmetric and is checked against a radial reference.
  {
    CaseDef c;
    c.name = "circular";
    c.discontinuous = true;
    c.defaults.caseName = c.name;
    c.defaults.x0 = 0.0; c.defaults.x1 = 10.0;
    c.defaults.y0 = 0.0; c.defaults.y1 = 10.0;
    c.defaults.dx = 0.1;
    c.defaults.G = 9.81;
    c.defaults.chi = 0.98;
    c.defaults.tEnd = 4.0;
    c.defaults.bc = {kFree, kFree, kFree, kFree};
    c.init = [](const Vec2& p, double, double* w) {
      const double r2 = (p.x - 5.0) * (p.x - 5.0) + (p.y - 5.0) * (p.y - 5.0);
      const bool in = r2 < 4.0;
      w[0] = in ? 1.8 : 0.2; w[1] = 0.0; w[2] = 0.0;
      w[3] = in ? 0.2 : 1.8; w[4] = 0.0; w[5] = 0.0;
    };
    reg.push_back(std::move(c));
  }

  // Dam breach through an irregular wall, wet and dry tailwater variants.
  auto irregular = [](const std::string& name, double h1R, double h2R) {
    CaseDef c;
    c.name = name;
    c.discontinuous = true;
    c.defaults.caseName = name;
    c.defaults.x0 = 0.0; c.defaults.x1 = 200.0;
    c.defaults.y0 = 0.0; c.defaults.y1 = 200.0;
    c.defaults.dx = 1.25;
    c.defaults.G = 9.81;
    c.defaults.chi = 1.0;
    c.defaults.tEnd = 7.2;
    c.defaults.bc = {kWall, kFree, kWall, kWall};
    c.makeMesh = [](const Config& cfg) {
      auto keep = [](const Vec2& p) {
        const bool inWallBand = p.x > 95.0 && p.x < 105.0;
        const bool inBreach = p.y > 95.0 && p.y < 170.0;
        return !(inWallBand && !inBreach);
      };
      auto tag = [&cfg](const Vec2& mid) -> int {
        const double tol = 1e-9 * 200.0;
        if (std::abs(mid.x - cfg.x1) < tol) return kFree;
        if (std::abs(mid.x - cfg.x0) < tol || std::abs(mid.y - cfg.y0) < tol ||
            std::abs(mid.y - cfg.y1) < tol) {
          return kWall;
        }
        return kWall;  // dam faces
      };
      return generate_structured(cfg.x0, cfg.x1, cfg.y0, cfg.y1, cfg.dx,
                                 {kWall, kFree, kWall, kWall}, keep, tag);
    };
    c.init = [h1R, h2R](const Vec2& p, double, double* w) {
      const bool reservoir = p.x < 95.0;
      w[0] = reservoir ? 9.0 : h1R; w[1] = 0.0; w[2] = 0.0;
      w[3] = reservoir ? 1.0 : h2R; w[4] = 0.0; w[5] = 0.0;
    };
    return c;
  };
  reg.push_back(irregular("dambreak_irregular_wet", 5.0, 0.0));
  reg.push_back(irregular("dambreak_irregular_dry", 1e-3, 1e-3));

  return reg;
}

const std::vector<CaseDef>& registry() {
  static const std::vector<CaseDef> reg = build_registry();
  return reg;
}

}  // namespace

const CaseDef& find_case(const std::string& name) {
  for (const auto& c : registry()) {
    if (c.name == name) return c;
  }
  throw std::runtime_error("unknown case '" + name + "'");
}

std::vector<std::string> case_names() {
  std::vector<std::string> names;
  for (const auto& c : registry()) names.push_back(c.name);
  return names;
}

}  // namespace tlgks
