#include "oracle1d.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace tlgks {

namespace {

constexpr double kTiny = 1e-12;
constexpr double kDryCut = 1e-8;

inline void layer_flux(double h, double hu, double G, double* f) {
  if (h <= kTiny) {
    f[0] = f[1] = 0.0;
    return;
  }
  const double u = hu / h;
  f[0] = hu;
  f[1] = hu * u + 0.5 * G * h * h;
}

inline double max_speed(const std::array<double, 4>& w, double G) {
  double s = 0.0;
  for (int l = 0; l < 2; ++l) {
    const double h = w[2 * l];
    if (h <= kTiny) continue;
    const double u = (h > kDryCut) ? w[2 * l + 1] / h : 0.0;
    s = std::max(s, std::abs(u) + std::sqrt(G * h));
  }
  return s;
}

}  // namespace

Solution1D oracle1d_run(const Problem1D& prob, int cells, double tEnd, double cfl) {
  if (cells < 2) throw std::runtime_error("oracle1d: need at least 2 cells");
  const double dx = (prob.x1 - prob.x0) / cells;

  Solution1D sol;
  sol.x.resize(cells);
  sol.W.assign(cells, {});
  for (int i = 0; i < cells; ++i) {
    sol.x[i] = prob.x0 + (i + 0.5) * dx;
    double w4[4];
    prob.init(sol.x[i], w4);
    sol.W[i] = {w4[0], w4[0] * w4[1], w4[2], w4[2] * w4[3]};
  }

  std::vector<double> Bface(cells + 1);
  for (int i = 0; i <= cells; ++i) {
    Bface[i] = prob.bed ? prob.bed(prob.x0 + i * dx) : 0.0;
  }

  std::vector<std::array<double, 4>> Wn = sol.W;
  std::vector<std::array<double, 4>> flux(cells + 1);

  double t = 0.0;
  while (t < tEnd - 1e-14) {
    double smax = 0.0;
    for (const auto& w : sol.W) smax = std::max(smax, max_speed(w, prob.G));
    double dt = (smax > 0.0) ? cfl * dx / smax : (tEnd - t);
    dt = std::min(dt, tEnd - t);

    auto ghost = [&](int i) -> std::array<double, 4> {
      if (i < 0) {
        if (prob.radial) {
          return {sol.W[0][0], -sol.W[0][1], sol.W[0][2], -sol.W[0][3]};
        }
        return sol.W[0];
      }
      if (i >= cells) return sol.W[cells - 1];
      return sol.W[i];
    };

    for (int i = 0; i <= cells; ++i) {
      const std::array<double, 4> wl = ghost(i - 1);
      const std::array<double, 4> wr = ghost(i);
      const double a = std::max(max_speed(wl, prob.G), max_speed(wr, prob.G));
      double fl[2], fr[2];
      for (int l = 0; l < 2; ++l) {
        layer_flux(wl[2 * l], wl[2 * l + 1], prob.G, fl);
        layer_flux(wr[2 * l], wr[2 * l + 1], prob.G, fr);
        flux[i][2 * l] = 0.5 * (fl[0] + fr[0]) - 0.5 * a * (wr[2 * l] - wl[2 * l]);
        flux[i][2 * l + 1] =
            0.5 * (fl[1] + fr[1]) - 0.5 * a * (wr[2 * l + 1] - wl[2 * l + 1]);
      }
    }

    for (int i = 0; i < cells; ++i) {
      const std::array<double, 4>& w = sol.W[i];
      const std::array<double, 4> wl = ghost(i - 1);
      const std::array<double, 4> wr = ghost(i + 1);
      const double dB = Bface[i + 1] - Bface[i];
      // Single-valued interface depths for the coupling terms.
      const double h2l = 0.5 * (wl[2] + w[2]), h2r = 0.5 * (w[2] + wr[2]);
      const double h1l = 0.5 * (wl[0] + w[0]), h1r = 0.5 * (w[0] + wr[0]);

      std::array<double, 4> src{};
      src[1] = -prob.G * w[0] * (dB + prob.chi * (h2r - h2l)) / dx;
      src[3] = -prob.G * w[2] * (dB + (h1r - h1l)) / dx;
      if (prob.radial) {
        const double invr = 1.0 / sol.x[i];
        for (int l = 0; l < 2; ++l) {
          const double h = w[2 * l], hu = w[2 * l + 1];
          const double u = (h > kDryCut) ? hu / h : 0.0;
          src[2 * l] -= invr * hu;
          src[2 * l + 1] -= invr * hu * u;
        }
      }

      for (int m = 0; m < 4; ++m) {
        Wn[i][m] = w[m] - dt / dx * (flux[i + 1][m] - flux[i][m]) + dt * src[m];
      }
      for (int l = 0; l < 2; ++l) {
        if (Wn[i][2 * l] < kTiny) Wn[i][2 * l] = kTiny;
        if (Wn[i][2 * l] < kDryCut) Wn[i][2 * l + 1] = 0.0;
      }
    }
    sol.W.swap(Wn);
    t += dt;
  }
  sol.t = tEnd;
  return sol;
}

Problem1D oracle1d_problem_for_case(const std::string& name) {
  Problem1D p;
  if (name == "riemann1") {
    p.x0 = 0.0; p.x1 = 1.0; p.G = 10.0; p.chi = 0.98;
    p.init = [](double x, double* w) {
      const bool left = x < 0.3;
      w[0] = left ? 0.5 : 0.55;
      w[1] = 2.5;
      w[2] = left ? 0.5 : 0.45;
      w[3] = 2.5;
    };
    return p;
  }
  if (name == "riemann2") {
    p.x0 = 0.0; p.x1 = 10.0; p.G = 9.81; p.chi = 0.98;
    p.init = [](double x, double* w) {
      const bool left = x < 5.0;
      w[0] = left ? 0.2 : 1.8;
      w[1] = 0.0;
      w[2] = left ? 1.8 : 0.2;
      w[3] = 0.0;
    };
    return p;
  }
  if (name == "dambreak") {
    p.x0 = 0.0; p.x1 = 1.0; p.G = 9.81; p.chi = 1.0;
    p.init = [](double x, double* w) {
      w[0] = 0.357;
      w[1] = 0.0;
      w[2] = (x < 0.5) ? 1.0 : 0.0;
      w[3] = 0.0;
    };
    return p;
  }
  if (name == "channel") {
    p.x0 = 0.0; p.x1 = 1.0; p.G = 9.81; p.chi = 0.98;
    auto bed = [](double x) {
      const double d = x - 0.5;
      return 0.5 * std::exp(-100.0 * d * d);
    };
    p.bed = bed;
    p.init = [bed](double x, double* w) {
      w[0] = 0.8 - bed(x);
      w[1] = -0.2;
      w[2] = 0.4;
      w[3] = 0.15;
    };
    return p;
  }
  if (name == "circular") {
    p.x0 = 0.0; p.x1 = 8.0; p.G = 9.81; p.chi = 0.98; p.radial = true;
    p.init = [](double r, double* w) {
      const bool in = r < 2.0;
      w[0] = in ? 1.8 : 0.2;
      w[1] = 0.0;
      w[2] = in ? 0.2 : 1.8;
      w[3] = 0.0;
    };
    return p;
  }
  throw std::runtime_error("oracle1d: no 1-D reduction for case '" + name + "'");
}

void write_oracle_csv(const std::string& path, const Solution1D& sol) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("csv: cannot write '" + path + "'");
  out << "x,h1,h2,hu1,hu2\n";
  char buf[220];
  for (size_t i = 0; i < sol.x.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g\n", sol.x[i],
                  sol.W[i][0], sol.W[i][2], sol.W[i][1], sol.W[i][3]);
    out << buf;
  }
}

}  // namespace tlgks
