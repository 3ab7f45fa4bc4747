#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "cases.hpp"
#include "config.hpp"
#include "geom.hpp"
#include "kinetic.hpp"
#include "mesh.hpp"
#include "recon.hpp"
#include "topo.hpp"

namespace tlgks {

struct Diagnostics {
  std::array<double, 2> mass{};            // per layer
  std::array<std::array<double, 2>, 2> momentum{};  // per layer (x, y)
  double clampedMass = 0.0;                // mass added by positivity clamps
};

// Two-layer shallow water solver: compact cubic reconstruction, kinetic
// interface fluxes with hydrostatic slope shifts, well-balanced bed and
// interlayer sources, two-stage fourth-order time stepping with point-value
// gradient evolution.
class Solver {
 public:
  explicit Solver(const Config& cfg);
  Solver(const Config& cfg, Mesh mesh);

  double time() const { return t_; }
  const Config& config() const { return cfg_; }
  const Mesh& mesh() const { return mesh_; }
  const Topography& topo() const { return topo_; }
  const Reconstruction& recon() const { return recon_; }

  // Cell averages / average gradients of (h, hu, hv); layer 0 is the lower.
  const std::vector<std::array<double, 3>>& avg(int layer) const { return avg_[layer]; }
  const std::vector<std::array<Vec2, 3>>& grad(int layer) const { return grad_[layer]; }
  std::vector<std::array<double, 3>>& avg_mut(int layer) { return avg_[layer]; }
  std::vector<std::array<Vec2, 3>>& grad_mut(int layer) { return grad_[layer]; }

  double compute_dt() const;
  void step(double dt);
  // CFL-limited steps, clipped to hit tTarget exactly.
  void advance_to(double tTarget);
  // Full run to t_end with periodic output when configured.
  void run();

  Diagnostics diagnostics() const;

  // Area-weighted mean |h - ref| per layer; ref fills (h1, h2) at a point.
  std::array<double, 2> l1_error_depths(
      const std::function<void(const Vec2&, double*)>& ref) const;

 private:
  using CellTriple = std::array<double, 3>;

  void build();
  void init_fields();
  void apply_floors(std::array<std::vector<CellTriple>, 2>& avg,
                    std::array<std::vector<std::array<Vec2, 3>>, 2>& grad,
                    bool count);

  // One flux/source evaluation on the given state. Fills per-cell flux and
  // source operators and their flux time derivative, plus per-point
  // interface values at the stage midpoint for the gradient update.
  void stage_compute(const std::array<std::vector<CellTriple>, 2>& avg,
                     const std::array<std::vector<std::array<Vec2, 3>>, 2>& grad,
                     double dt,
                     std::array<std::vector<CellTriple>, 2>& LF,
                     std::array<std::vector<CellTriple>, 2>& LS,
                     std::array<std::vector<CellTriple>, 2>& dLF);

  void gradient_from_points(std::array<std::vector<std::array<Vec2, 3>>, 2>& gradOut);

  void write_outputs(int index);

  Config cfg_;
  const CaseDef* case_ = nullptr;  // null for custom configs
  Mesh mesh_;
  Topography topo_;
  Reconstruction recon_;

  double t_ = 0.0;
  std::array<std::vector<CellTriple>, 2> avg_;
  std::array<std::vector<std::array<Vec2, 3>>, 2> grad_;
  double clampedMass_ = 0.0;
  double uCap_ = 0.0;  // speed bound from the initial data, 0 until set

  // stage buffers
  std::array<std::vector<CellTriple>, 2> halfAvg_;
  std::array<std::vector<std::array<Vec2, 3>>, 2> halfGrad_;
  std::array<std::vector<CellTriple>, 2> LFA_, LSA_, dLFA_, LFB_, LSB_, dLFB_;

  // reconstruction scratch: [layer][component]
  std::array<std::array<std::vector<double>, 3>, 2> varAvg_;
  std::array<std::array<std::vector<Vec2>, 3>, 2> varGrad_;
  std::array<std::array<std::vector<std::array<double, kNumBasis>>, 3>, 2> coef_;

  // face traces: index ((e*2 + k)*2 + side)*2 + layer
  struct FaceVal {
    double h, qn, qt;
    double dh_n, dh_t, dqn_n, dqn_t, dqt_n, dqt_t;
  };
  std::vector<FaceVal> face_;
  std::vector<double> hhat_;               // (e, k, layer)
  std::array<std::vector<Vec2>, 2> plane_; // per layer: cell plane slope of hhat
  std::vector<std::array<double, 3>> ifull_, ihalf_;  // (e, k, layer), edge frame
  std::vector<std::array<double, 3>> wpt_;  // W(dt/2) per point, edge frame

  // per-cell per-layer sum of the 6 inner-trace depths (for the interlayer
  // source) and boundary-integral of hhat (single-valued depth gradient)
  std::array<std::vector<double>, 2> faceDepthSum_;
  std::array<std::vector<Vec2>, 2> hatGrad_;
};

void dump_state_vtk(const Solver& s, const std::string& path);
void dump_centerline_csv(const Solver& s, const std::string& path);

}  // namespace tlgks
