#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "config.hpp"
#include "integrator.hpp"
#include "mesh.hpp"
#include "solver.hpp"

using namespace tlgks;

TEST_CASE("time step follows the fastest gravity wave") {
  Config cfg;
  cfg.caseName = "custom";
  cfg.x0 = 0.0;
  cfg.x1 = 1.0;
  cfg.y0 = 0.0;
  cfg.y1 = 1.0;
  cfg.dx = 0.05;
  cfg.cfl = 0.5;
  Solver s(cfg);
  REQUIRE(s.mesh().shortestEdge == doctest::Approx(0.05).epsilon(1e-13));

  for (int j = 0; j < s.mesh().num_cells(); ++j) {
    s.avg_mut(0)[j] = {0.8, 0.0, 0.0};
    s.avg_mut(1)[j] = {0.0, 0.0, 0.0};
  }
  // At rest the speed scale is the single-layer gravity wave sqrt(G h).
  const double expect = 0.5 * 0.05 / std::sqrt(9.81 * 0.8);
  CHECK(s.compute_dt() == doctest::Approx(expect).epsilon(1e-14));
  CHECK(s.compute_dt() == doctest::Approx(0.025 / std::sqrt(7.848)).epsilon(1e-14));

  // Advection adds on top of the wave speed where the layer is wet.
  for (int j = 0; j < s.mesh().num_cells(); ++j) {
    s.avg_mut(0)[j] = {0.8, 0.8 * 2.0, 0.0};  // U = 2
  }
  const double expectMoving = 0.5 * 0.05 / (2.0 + std::sqrt(9.81 * 0.8));
  CHECK(s.compute_dt() == doctest::Approx(expectMoving).epsilon(1e-13));
}

TEST_CASE("two-stage update reproduces the degree-4 Taylor polynomial") {
  // For y' = z y the half state supplies the cross term that completes the
  // fourth-order expansion of exp(z dt).
  for (double z : {-2.0, -0.7, 0.31, 1.0, 2.4}) {
    for (double dt : {1.0, 0.37, 0.05}) {
      const double w = z * dt;
      if (std::abs(w) > 2.5) continue;
      const double LA = z, dLA = z * z;
      const double yh = s2o4_half(1.0, dt, LA, dLA);
      const double dLB = z * z * yh;
      const double y1 = s2o4_final(1.0, dt, LA, dLA, dLB);
      const double taylor =
          1.0 + w * (1.0 + w * (0.5 + w * (1.0 / 6.0 + w / 24.0)));
      CHECK(std::abs(y1 - taylor) <= 1e-14 * std::max(1.0, std::abs(taylor)));
    }
  }
}

TEST_CASE("global fourth-order convergence on a nonlinear problem") {
  // y' = -y^3, y(0) = 1, exact y(t) = (1 + 2t)^(-1/2).
  auto rhs = [](double y) { return -y * y * y; };
  auto rhsDot = [](double y) { return 3.0 * y * y * y * y * y; };  // d/dt(-y^3)

  auto integrate = [&](int n) {
    const double T = 1.0;
    const double dt = T / n;
    double y = 1.0;
    for (int i = 0; i < n; ++i) {
      const double LA = rhs(y), dLA = rhsDot(y);
      const double yh = s2o4_half(y, dt, LA, dLA);
      y = s2o4_final(y, dt, LA, dLA, rhsDot(yh));
    }
    return std::abs(y - 1.0 / std::sqrt(3.0));
  };

  std::vector<double> err;
  for (int n : {8, 16, 32, 64}) err.push_back(integrate(n));
  double meanOrder = 0.0;
  for (size_t k = 1; k < err.size(); ++k) {
    const double p = std::log2(err[k - 1] / err[k]);
    CHECK(p > 3.5);
    meanOrder += p;
  }
  meanOrder /= err.size() - 1;
  CHECK(meanOrder >= 3.8);
}

TEST_CASE("advance lands exactly on the target time") {
  Config cfg = config_for_case("wellbalanced");
  cfg.dx = 0.4;
  Solver s(cfg);
  const double target = 3.0 * s.compute_dt() + 1e-4;
  s.advance_to(target);
  CHECK(s.time() == target);
  // A second call with the same target is a no-op.
  s.advance_to(target);
  CHECK(s.time() == target);
}
