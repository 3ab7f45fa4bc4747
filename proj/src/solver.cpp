#include "solver.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <stdexcept>

#include "integrator.hpp"
#include "output.hpp"
#include "quadrature.hpp"

namespace tlgks {

namespace {

inline int fidx(int e, int k, int side, int layer) {
  return ((e * 2 + k) * 2 + side) * 2 + layer;
}
inline int pidx(int e, int k, int layer) { return (e * 2 + k) * 2 + layer; }

// Bounded trace velocity: exact q/h above eps, smoothly damped to zero
// below, so near-dry traces cannot feed unbounded speeds into the fluxes.
inline double trace_vel(double q, double h, double eps) {
  return (h >= eps) ? q / h : 2.0 * h * q / (h * h + eps * eps);
}

// Cells within this factor of the dry threshold take first-order face values;
// cubic traces there divide near-zero depths and destabilize wetting fronts.
constexpr double kThinBand = 10.0;

Mesh make_mesh_from_config(const Config& cfg, const CaseDef* c) {
  if (cfg.meshMode == "file") return load_mesh(cfg.meshPath);
  if (c && c->makeMesh) return c->makeMesh(cfg);
  return generate_structured(cfg.x0, cfg.x1, cfg.y0, cfg.y1, cfg.dx, cfg.bc);
}

const CaseDef* lookup_case(const std::string& name) {
  if (name.empty() || name == "custom") return nullptr;
  return &find_case(name);
}

}  // namespace

Solver::Solver(const Config& cfg)
    : cfg_(cfg),
      case_(lookup_case(cfg.caseName)),
      mesh_(make_mesh_from_config(cfg, case_)),
      topo_(Topography::build(mesh_, case_ ? case_->bed : nullptr)),
      recon_(mesh_) {
  build();
}

Solver::Solver(const Config& cfg, Mesh mesh)
    : cfg_(cfg),
      case_(lookup_case(cfg.caseName)),
      mesh_(std::move(mesh)),
      topo_(Topography::build(mesh_, case_ ? case_->bed : nullptr)),
      recon_(mesh_) {
  build();
}

void Solver::build() {
  const int nc = mesh_.num_cells();
  const int ne = mesh_.num_edges();
  for (int l = 0; l < 2; ++l) {
    avg_[l].assign(nc, CellTriple{});
    grad_[l].assign(nc, {Vec2{}, Vec2{}, Vec2{}});
    halfAvg_[l].assign(nc, CellTriple{});
    halfGrad_[l].assign(nc, {Vec2{}, Vec2{}, Vec2{}});
    for (auto* buf : {&LFA_, &LSA_, &dLFA_, &LFB_, &LSB_, &dLFB_}) {
      (*buf)[l].assign(nc, CellTriple{});
    }
    for (int v = 0; v < 3; ++v) {
      varAvg_[l][v].assign(nc, 0.0);
      varGrad_[l][v].assign(nc, Vec2{});
      coef_[l][v].assign(nc, std::array<double, kNumBasis>{});
    }
    plane_[l].assign(nc, Vec2{});
    faceDepthSum_[l].assign(nc, 0.0);
    hatGrad_[l].assign(nc, Vec2{});
  }
  face_.assign(static_cast<size_t>(ne) * 8, FaceVal{});
  hhat_.assign(static_cast<size_t>(ne) * 4, 0.0);
  ifull_.assign(static_cast<size_t>(ne) * 4, {});
  ihalf_.assign(static_cast<size_t>(ne) * 4, {});
  wpt_.assign(static_cast<size_t>(ne) * 4, {});

  if (case_) init_fields();
}

void Solver::init_fields() {
  const int nc = mesh_.num_cells();
  const bool rough = case_->discontinuous;

  auto bedAt = [this](int j, const Vec2& x) {
    return topo_.cellAvg[j] + topo_.cellGrad[j].dot(x - mesh_.centroid[j]);
  };

#pragma omp parallel for schedule(static)
  for (int j = 0; j < nc; ++j) {
    double w6[6];
    if (rough) {
      case_->init(mesh_.centroid[j], topo_.cellAvg[j], w6);
      avg_[0][j] = {w6[0], w6[0] * w6[1], w6[0] * w6[2]};
      avg_[1][j] = {w6[3], w6[3] * w6[4], w6[3] * w6[5]};
    } else {
      const auto& c = mesh_.cell[j];
      for (int comp = 0; comp < 6; ++comp) {
        const int l = comp / 3, m = comp % 3;
        avg_[l][j][m] = tri_average_refined(
            mesh_.node[c[0]], mesh_.node[c[1]], mesh_.node[c[2]],
            [&](const Vec2& x) {
              double w[6];
              case_->init(x, bedAt(j, x), w);
              const double h = w[l * 3];
              return (m == 0) ? h : h * w[l * 3 + m];
            });
      }
    }
  }

  // Initial average gradients from the boundary integral of the pointwise
  // initial state; for rough data the first step rebuilds slopes instead.
#pragma omp parallel for schedule(static)
  for (int j = 0; j < nc; ++j) {
    for (int l = 0; l < 2; ++l) grad_[l][j] = {Vec2{}, Vec2{}, Vec2{}};
    if (rough) continue;
    for (int s = 0; s < 3; ++s) {
      const int e = mesh_.cellEdge[j][s];
      const Edge& ed = mesh_.edge[e];
      const double sgn = mesh_.cellSign[j][s];
      for (int k = 0; k < 2; ++k) {
        double w6[6];
        case_->init(ed.gauss[k], topo_.edgeB[e][k], w6);
        const double coef = sgn * ed.length * 0.5 / mesh_.area[j];
        for (int l = 0; l < 2; ++l) {
          const double h = w6[l * 3];
          const double tr[3] = {h, h * w6[l * 3 + 1], h * w6[l * 3 + 2]};
          for (int m = 0; m < 3; ++m) {
            grad_[l][j][m] += (coef * tr[m]) * ed.normal;
          }
        }
      }
    }
  }

  apply_floors(avg_, grad_, false);

  // Speed bound for the positivity guard: no physical state in these flows
  // exceeds the initial maximum speed plus a dam-break front at the initial
  // maximum total depth. Cells driven past the bound carry numerical noise
  // from a wetting front, not a resolvable wave.
  double hTotMax = 0.0, u0max = 0.0;
  for (int j = 0; j < nc; ++j) {
    hTotMax = std::max(hTotMax, avg_[0][j][0] + avg_[1][j][0]);
    for (int l = 0; l < 2; ++l) {
      const double h = avg_[l][j][0];
      if (h < cfg_.hDry) continue;
      u0max = std::max(u0max, std::hypot(avg_[l][j][1], avg_[l][j][2]) / h);
    }
  }
  uCap_ = 3.0 * (std::sqrt(cfg_.G * hTotMax) + u0max);

  t_ = 0.0;
  clampedMass_ = 0.0;
}

void Solver::apply_floors(std::array<std::vector<CellTriple>, 2>& avg,
                          std::array<std::vector<std::array<Vec2, 3>>, 2>& grad,
                          bool count) {
  const int nc = mesh_.num_cells();
  double added = 0.0;
#pragma omp parallel for schedule(static) reduction(+ : added)
  for (int j = 0; j < nc; ++j) {
    for (int l = 0; l < 2; ++l) {
      double& h = avg[l][j][0];
      if (h < cfg_.hMin) {
        added += (cfg_.hMin - h) * mesh_.area[j];
        h = cfg_.hMin;
      }
      if (h < cfg_.hDry) {
        avg[l][j][1] = 0.0;
        avg[l][j][2] = 0.0;
        grad[l][j] = {Vec2{}, Vec2{}, Vec2{}};
      } else if (uCap_ > 0.0) {
        // Wetting fronts can seed thin cells with noise momentum whose
        // velocity, and hence momentum flux q^2/h, grows without bound.
        // Rescale momentum so the cell speed honors the global bound.
        const double umag = std::hypot(avg[l][j][1], avg[l][j][2]) / h;
        if (umag > uCap_) {
          const double s = uCap_ / umag;
          avg[l][j][1] *= s;
          avg[l][j][2] *= s;
        }
      }
    }
  }
  if (count) clampedMass_ += added;
}

double Solver::compute_dt() const {
  const int nc = mesh_.num_cells();
  double umax = 0.0;
#pragma omp parallel for schedule(static) reduction(max : umax)
  for (int j = 0; j < nc; ++j) {
    for (int l = 0; l < 2; ++l) {
      const double h = avg_[l][j][0];
      if (h <= 0.0) continue;
      const double c = std::sqrt(cfg_.G * h);
      double s = c;
      if (h > cfg_.hDry) {
        const double u = avg_[l][j][1] / h, v = avg_[l][j][2] / h;
        s += std::sqrt(u * u + v * v);
      }
      umax = std::max(umax, s);
    }
  }
  if (!(umax > 0.0)) throw std::runtime_error("solver: zero wave speed estimate");
  return cfg_.cfl * mesh_.shortestEdge / umax;
}

void Solver::stage_compute(const std::array<std::vector<CellTriple>, 2>& avg,
                           const std::array<std::vector<std::array<Vec2, 3>>, 2>& grad,
                           double dt,
                           std::array<std::vector<CellTriple>, 2>& LF,
                           std::array<std::vector<CellTriple>, 2>& LS,
                           std::array<std::vector<CellTriple>, 2>& dLF) {
  const int nc = mesh_.num_cells();
  const int ne = mesh_.num_edges();

  // Reconstruction variables: the lower layer's mass slot is its water level
  // (depth plus bed) so slopes vanish identically at rest; the upper layer's
  // depth is already level-like at rest.
#pragma omp parallel for schedule(static)
  for (int j = 0; j < nc; ++j) {
    for (int l = 0; l < 2; ++l) {
      varAvg_[l][0][j] = (l == 0) ? avg[l][j][0] + topo_.cellAvg[j] : avg[l][j][0];
      varGrad_[l][0][j] = (l == 0) ? grad[l][j][0] + topo_.cellGrad[j] : grad[l][j][0];
      for (int m = 1; m < 3; ++m) {
        varAvg_[l][m][j] = avg[l][j][m];
        varGrad_[l][m][j] = grad[l][j][m];
      }
    }
  }
  for (int l = 0; l < 2; ++l) {
    for (int m = 0; m < 3; ++m) {
      recon_.reconstruct(varAvg_[l][m], varGrad_[l][m], coef_[l][m],
                         !std::getenv("TLGKS_UNLIM"));
    }
  }

  // Face traces and single-valued interface depths.
#pragma omp parallel for schedule(static)
  for (int e = 0; e < ne; ++e) {
    const Edge& ed = mesh_.edge[e];
    const Vec2 n = ed.normal;
    const Vec2 tg{-n.y, n.x};
    for (int k = 0; k < 2; ++k) {
      const Vec2& x = ed.gauss[k];
      for (int l = 0; l < 2; ++l) {
        const int nsides = (ed.right >= 0) ? 2 : 1;
        for (int s = 0; s < nsides; ++s) {
          const int cellId = (s == 0) ? ed.left : ed.right;
          FaceVal& fv = face_[fidx(e, k, s, l)];
          const double havg = avg[l][cellId][0];
          if (havg < cfg_.hDry) {
            fv = FaceVal{std::max(havg, cfg_.hMin), 0, 0, 0, 0, 0, 0, 0, 0};
            continue;
          }
          double mv = recon_.value(cellId, varAvg_[l][0][cellId], coef_[l][0][cellId], x);
          Vec2 gh = recon_.gradient(cellId, coef_[l][0][cellId], x);
          if (l == 0) {
            mv -= topo_.edgeB[e][k];
            gh = gh - topo_.cellGrad[cellId];
          }
          if (mv < cfg_.hDry || havg < kThinBand * cfg_.hDry) {
            // Undershooting trace at a wet cell: first-order side values keep
            // the velocity bounded by the cell average's.
            const double qxa = avg[l][cellId][1];
            const double qya = avg[l][cellId][2];
            fv = FaceVal{std::max(havg, cfg_.hMin),
                         qxa * n.x + qya * n.y,
                         qxa * tg.x + qya * tg.y,
                         0, 0, 0, 0, 0, 0};
            continue;
          }
          const double qx = recon_.value(cellId, varAvg_[l][1][cellId], coef_[l][1][cellId], x);
          const double qy = recon_.value(cellId, varAvg_[l][2][cellId], coef_[l][2][cellId], x);
          const Vec2 gqx = recon_.gradient(cellId, coef_[l][1][cellId], x);
          const Vec2 gqy = recon_.gradient(cellId, coef_[l][2][cellId], x);

          fv.h = std::max(mv, cfg_.hMin);
          fv.qn = qx * n.x + qy * n.y;
          fv.qt = qx * tg.x + qy * tg.y;
          fv.dh_n = gh.dot(n);
          fv.dh_t = gh.dot(tg);
          const Vec2 gqn = gqx * n.x + gqy * n.y;
          const Vec2 gqt = gqx * tg.x + gqy * tg.y;
          fv.dqn_n = gqn.dot(n);
          fv.dqn_t = gqn.dot(tg);
          fv.dqt_n = gqt.dot(n);
          fv.dqt_t = gqt.dot(tg);
        }
        if (ed.right < 0) {
          // Ghost trace: free copies the interior; wall mirrors with the
          // parities of a reflected flow.
          const FaceVal& in = face_[fidx(e, k, 0, l)];
          FaceVal& gv = face_[fidx(e, k, 1, l)];
          gv = in;
          if (ed.tag == kWall) {
            gv.qn = -in.qn;
            gv.dh_n = -in.dh_n;
            gv.dqn_t = -in.dqn_t;
            gv.dqt_n = -in.dqt_n;
          }
        }
        const FaceVal& L = face_[fidx(e, k, 0, l)];
        const FaceVal& R = face_[fidx(e, k, 1, l)];
        const double xi = upwind_blend(trace_vel(L.qn, L.h, cfg_.hDry),
                                       trace_vel(R.qn, R.h, cfg_.hDry),
                                       cfg_.velScale);
        hhat_[pidx(e, k, l)] = xi * L.h + (1.0 - xi) * R.h;
      }
    }
  }

  // Plane model of the single-valued depths inside each cell.
#pragma omp parallel for schedule(static)
  for (int j = 0; j < nc; ++j) {
    for (int l = 0; l < 2; ++l) {
      std::array<double, 3> ec;
      for (int s = 0; s < 3; ++s) {
        const int e = mesh_.cellEdge[j][s];
        ec[s] = 0.5 * (hhat_[pidx(e, 0, l)] + hhat_[pidx(e, 1, l)]);
      }
      plane_[l][j] = plane_slope(mesh_, j, ec);
    }
  }

  // Interface evolution at every edge quadrature point.
#pragma omp parallel for schedule(static)
  for (int e = 0; e < ne; ++e) {
    const Edge& ed = mesh_.edge[e];
    const Vec2 n = ed.normal;
    const Vec2 tg{-n.y, n.x};
    const bool hull = ed.right < 0;
    const int cl = ed.left;
    const int cr = hull ? cl : ed.right;
    const Vec2 dBl = topo_.cellGrad[cl];
    const Vec2 dBr = topo_.cellGrad[cr];
    const double dBln = dBl.dot(n), dBlt = dBl.dot(tg);
    double dBrn = dBr.dot(n), dBrt = dBr.dot(tg);
    if (hull && ed.tag == kWall) dBrn = -dBln;
    for (int k = 0; k < 2; ++k) {
      for (int l = 0; l < 2; ++l) {
        const int p = 1 - l;  // partner layer carrying the hydrostatic shift
        const FaceVal& fL = face_[fidx(e, k, 0, l)];
        const FaceVal& fR = face_[fidx(e, k, 1, l)];
        const FaceVal& pL = face_[fidx(e, k, 0, p)];
        const FaceVal& pR = face_[fidx(e, k, 1, p)];

        const double w = blend_weight(pL.h, pR.h);
        const Vec2 planeL = plane_[p][cl];
        double psLn = planeL.dot(n), psLt = planeL.dot(tg);
        double psRn, psRt;
        if (hull) {
          psRn = (ed.tag == kWall) ? -psLn : psLn;
          psRt = psLt;
        } else {
          const Vec2 planeR = plane_[p][cr];
          psRn = planeR.dot(n);
          psRt = planeR.dot(tg);
        }
        const double bsLn = w * pL.dh_n + (1.0 - w) * psLn;
        const double bsLt = w * pL.dh_t + (1.0 - w) * psLt;
        const double bsRn = w * pR.dh_n + (1.0 - w) * psRn;
        const double bsRt = w * pR.dh_t + (1.0 - w) * psRt;

        const double kap = (l == 0) ? cfg_.chi : 1.0;

        InterfaceState SL, SR;
        SL.h = fL.h;
        SL.Un = trace_vel(fL.qn, fL.h, cfg_.hDry);
        SL.Ut = trace_vel(fL.qt, fL.h, cfg_.hDry);
        SL.sn = {fL.dh_n + dBln + kap * bsLn, fL.dqn_n, fL.dqt_n};
        SL.st = {fL.dh_t + dBlt + kap * bsLt, fL.dqn_t, fL.dqt_t};
        SR.h = fR.h;
        SR.Un = trace_vel(fR.qn, fR.h, cfg_.hDry);
        SR.Ut = trace_vel(fR.qt, fR.h, cfg_.hDry);
        SR.sn = {fR.dh_n + dBrn + kap * bsRn, fR.dqn_n, fR.dqt_n};
        SR.st = {fR.dh_t + dBrt + kap * bsRt, fR.dqn_t, fR.dqt_t};

        const double tau = collision_time(fL.h, fR.h, dt, cfg_.epsTau, cfg_.cNum);
        InterfaceSolution sol;
        try {
          sol = solve_interface(SL, SR, tau, cfg_.G);
        } catch (const std::exception& ex) {
          throw std::runtime_error("flux failure at edge " + std::to_string(e) +
                                   " point " + std::to_string(k) + " layer " +
                                   std::to_string(l) + ": " + ex.what());
        }

        const int q = pidx(e, k, l);
        ifull_[q] = sol.Iflux(dt);
        ihalf_[q] = sol.Iflux(0.5 * dt);
        if (hull && ed.tag == kWall) {
          // No mass or tangential momentum crosses a wall.
          ifull_[q][0] = ihalf_[q][0] = 0.0;
          ifull_[q][2] = ihalf_[q][2] = 0.0;
        }
        // Interface state for the gradient update. The evolution value at the
        // stage midpoint is fully relaxed (dt/2 spans many collision times),
        // which carries the upwind damping the compact slope field needs; a
        // tangent extension from t=0 keeps free-streaming transport active
        // far past its validity and destabilizes the scheme near cfl 1/2.
        wpt_[q] = sol.W(0.5 * dt);
      }
    }
  }

  // Per-cell reduction: flux divergence, its time derivative, and the
  // well-balanced sources.
  const double invdt = 1.0 / dt;
#pragma omp parallel for schedule(static)
  for (int j = 0; j < nc; ++j) {
    for (int l = 0; l < 2; ++l) {
      CellTriple lf{}, dlf{};
      double depthSum = 0.0;
      Vec2 hatg{};
      for (int s = 0; s < 3; ++s) {
        const int e = mesh_.cellEdge[j][s];
        const Edge& ed = mesh_.edge[e];
        const double sgn = mesh_.cellSign[j][s];
        const Vec2 n = ed.normal;
        const Vec2 tg{-n.y, n.x};
        const double wlen = 0.5 * ed.length * sgn;
        const int side = (sgn > 0) ? 0 : 1;
        for (int k = 0; k < 2; ++k) {
          const int q = pidx(e, k, l);
          const double F0 = (4.0 * ihalf_[q][0] - ifull_[q][0]) * invdt;
          const double F1 = (4.0 * ihalf_[q][1] - ifull_[q][1]) * invdt;
          const double F2 = (4.0 * ihalf_[q][2] - ifull_[q][2]) * invdt;
          const double G0 = 4.0 * (ifull_[q][0] - 2.0 * ihalf_[q][0]) * invdt * invdt;
          const double G1 = 4.0 * (ifull_[q][1] - 2.0 * ihalf_[q][1]) * invdt * invdt;
          const double G2 = 4.0 * (ifull_[q][2] - 2.0 * ihalf_[q][2]) * invdt * invdt;
          lf[0] += wlen * F0;
          lf[1] += wlen * (F1 * n.x + F2 * tg.x);
          lf[2] += wlen * (F1 * n.y + F2 * tg.y);
          dlf[0] += wlen * G0;
          dlf[1] += wlen * (G1 * n.x + G2 * tg.x);
          dlf[2] += wlen * (G1 * n.y + G2 * tg.y);
          depthSum += face_[fidx(e, k, side, l)].h;
          hatg += (wlen * hhat_[pidx(e, k, l)]) * n;
        }
      }
      const double inva = 1.0 / mesh_.area[j];
      LF[l][j] = {-lf[0] * inva, -lf[1] * inva, -lf[2] * inva};
      dLF[l][j] = {-dlf[0] * inva, -dlf[1] * inva, -dlf[2] * inva};
      faceDepthSum_[l][j] = depthSum;
      hatGrad_[l][j] = hatg * inva;
    }
    for (int l = 0; l < 2; ++l) {
      const double kap = (l == 0) ? cfg_.chi : 1.0;
      const double hbar = avg[l][j][0];
      const double hface = faceDepthSum_[l][j] / 6.0;
      const Vec2& dB = topo_.cellGrad[j];
      const Vec2& dHat = hatGrad_[1 - l][j];
      LS[l][j] = {0.0,
                  -cfg_.G * hbar * dB.x - kap * cfg_.G * hface * dHat.x,
                  -cfg_.G * hbar * dB.y - kap * cfg_.G * hface * dHat.y};
    }
  }
}

void Solver::gradient_from_points(std::array<std::vector<std::array<Vec2, 3>>, 2>& gradOut) {
  const int nc = mesh_.num_cells();
#pragma omp parallel for schedule(static)
  for (int j = 0; j < nc; ++j) {
    for (int l = 0; l < 2; ++l) {
      std::array<Vec2, 3> g{};
      for (int s = 0; s < 3; ++s) {
        const int e = mesh_.cellEdge[j][s];
        const Edge& ed = mesh_.edge[e];
        const double sgn = mesh_.cellSign[j][s];
        const Vec2 n = ed.normal;
        const Vec2 tg{-n.y, n.x};
        const double wlen = 0.5 * ed.length * sgn;
        for (int k = 0; k < 2; ++k) {
          const int q = pidx(e, k, l);
          const double m = wpt_[q][0];
          const double qn = wpt_[q][1];
          const double qt = wpt_[q][2];
          const double qx = qn * n.x + qt * tg.x;
          const double qy = qn * n.y + qt * tg.y;
          g[0] += (wlen * m) * n;
          g[1] += (wlen * qx) * n;
          g[2] += (wlen * qy) * n;
        }
      }
      const double inva = 1.0 / mesh_.area[j];
      for (int m = 0; m < 3; ++m) gradOut[l][j][m] = g[m] * inva;
    }
  }
}

void Solver::step(double dt) {
  if (!(dt > 0.0)) throw std::runtime_error("solver: nonpositive dt");
  const int nc = mesh_.num_cells();

  stage_compute(avg_, grad_, dt, LFA_, LSA_, dLFA_);

  // Half state: full operator once, flux time derivative at second order.
#pragma omp parallel for schedule(static)
  for (int j = 0; j < nc; ++j) {
    for (int l = 0; l < 2; ++l) {
      for (int m = 0; m < 3; ++m) {
        halfAvg_[l][j][m] = s2o4_half(avg_[l][j][m], dt,
                                      LFA_[l][j][m] + LSA_[l][j][m],
                                      dLFA_[l][j][m]);
      }
    }
  }
  gradient_from_points(halfGrad_);
  apply_floors(halfAvg_, halfGrad_, false);

  stage_compute(halfAvg_, halfGrad_, dt, LFB_, LSB_, dLFB_);

#pragma omp parallel for schedule(static)
  for (int j = 0; j < nc; ++j) {
    for (int l = 0; l < 2; ++l) {
      for (int m = 0; m < 3; ++m) {
        const double dLS = 2.0 * (LSB_[l][j][m] - LSA_[l][j][m]) / dt;
        avg_[l][j][m] = s2o4_final(avg_[l][j][m], dt,
                                   LFA_[l][j][m] + LSA_[l][j][m],
                                   dLFA_[l][j][m] + dLS, dLFB_[l][j][m] + dLS);
      }
    }
  }
  gradient_from_points(grad_);
  apply_floors(avg_, grad_, true);

  t_ += dt;
}

void Solver::advance_to(double tTarget) {
  const double eps = 1e-12 * std::max(1.0, std::abs(tTarget));
  while (t_ < tTarget - eps) {
    const double dt = std::min(compute_dt(), tTarget - t_);
    step(dt);
  }
  t_ = tTarget;
}

Diagnostics Solver::diagnostics() const {
  Diagnostics d;
  d.clampedMass = clampedMass_;
  for (int l = 0; l < 2; ++l) {
    double m = 0.0, px = 0.0, py = 0.0;
    for (int j = 0; j < mesh_.num_cells(); ++j) {
      m += mesh_.area[j] * avg_[l][j][0];
      px += mesh_.area[j] * avg_[l][j][1];
      py += mesh_.area[j] * avg_[l][j][2];
    }
    d.mass[l] = m;
    d.momentum[l] = {px, py};
  }
  return d;
}

std::array<double, 2> Solver::l1_error_depths(
    const std::function<void(const Vec2&, double*)>& ref) const {
  const int nc = mesh_.num_cells();
  double e1 = 0.0, e2 = 0.0, atot = 0.0;
#pragma omp parallel for schedule(static) reduction(+ : e1, e2, atot)
  for (int j = 0; j < nc; ++j) {
    const auto& c = mesh_.cell[j];
    const double r1 = tri_average_refined(mesh_.node[c[0]], mesh_.node[c[1]],
                                          mesh_.node[c[2]], [&](const Vec2& x) {
                                            double w[2];
                                            ref(x, w);
                                            return w[0];
                                          });
    const double r2 = tri_average_refined(mesh_.node[c[0]], mesh_.node[c[1]],
                                          mesh_.node[c[2]], [&](const Vec2& x) {
                                            double w[2];
                                            ref(x, w);
                                            return w[1];
                                          });
    e1 += mesh_.area[j] * std::abs(avg_[0][j][0] - r1);
    e2 += mesh_.area[j] * std::abs(avg_[1][j][0] - r2);
    atot += mesh_.area[j];
  }
  return {e1 / atot, e2 / atot};
}

void Solver::write_outputs(int index) {
  if (cfg_.outDir.empty()) return;
  std::filesystem::create_directories(cfg_.outDir);
  char name[64];
  std::snprintf(name, sizeof name, "%s_%04d.vtk",
                case_ ? case_->name.c_str() : "state", index);
  dump_state_vtk(*this, cfg_.outDir + "/" + name);
  const Diagnostics d = diagnostics();
  append_conservation(cfg_.outDir + "/conservation.csv", t_, d);
}

void Solver::run() {
  int index = 0;
  write_outputs(index++);
  const double interval = cfg_.outInterval;
  double next = (interval > 0.0) ? interval : cfg_.tEnd;
  while (t_ < cfg_.tEnd - 1e-12 * std::max(1.0, cfg_.tEnd)) {
    advance_to(std::min(next, cfg_.tEnd));
    write_outputs(index++);
    next += (interval > 0.0) ? interval : cfg_.tEnd;
  }
  if (!cfg_.outDir.empty()) {
    dump_centerline_csv(*this, cfg_.outDir + "/centerline.csv");
    if (case_ && case_->hasAnalytic) {
      const double t = t_;
      const auto err = l1_error_depths([&](const Vec2& x, double* w) {
        case_->analytic(x, t, w);
      });
      write_error_report(cfg_.outDir + "/errors.csv", t, err);
    }
  }
}

}  // namespace tlgks
