#include "tlgks/tlgks.h"

#include <cstring>
#include <exception>
#include <stdexcept>
#include <string>

#include "cases.hpp"
#include "config.hpp"
#include "mesh.hpp"
#include "oracle1d.hpp"
#include "output.hpp"
#include "solver.hpp"

namespace {

thread_local std::string g_lastError;

void set_error(const std::string& msg) { g_lastError = msg; }

tlgks_status fail(tlgks_status code, const std::string& msg) {
  set_error(msg);
  return code;
}

// IO failures surface as runtime_error with a path in the message; map
// everything else to the generic runtime code.
tlgks_status code_for(const std::exception& e) {
  const std::string what = e.what();
  if (what.find("cannot") != std::string::npos ||
      what.find("file") != std::string::npos) {
    return TLGKS_ERR_IO;
  }
  return TLGKS_ERR_RUNTIME;
}

template <typename Fn>
tlgks_status guarded(Fn&& fn) {
  try {
    fn();
    return TLGKS_OK;
  } catch (const std::exception& e) {
    return fail(code_for(e), e.what());
  } catch (...) {
    return fail(TLGKS_ERR_RUNTIME, "unknown failure");
  }
}

}  // namespace

struct tlgks_config {
  tlgks::Config cfg;
};

struct tlgks_mesh {
  tlgks::Mesh mesh;
};

struct tlgks_solver {
  tlgks::Solver solver;
};

extern "C" {

const char* tlgks_version(void) { return "1.0.0"; }

const char* tlgks_last_error(void) { return g_lastError.c_str(); }

/* ---- configuration ---- */

tlgks_status tlgks_config_from_case(const char* name, tlgks_config** out) {
  if (!name || !out) return fail(TLGKS_ERR_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    auto* c = new tlgks_config{tlgks::config_for_case(name)};
    *out = c;
  });
}

tlgks_status tlgks_config_from_json(const char* path, tlgks_config** out) {
  if (!path || !out) return fail(TLGKS_ERR_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    auto* c = new tlgks_config{tlgks::config_from_json(path)};
    *out = c;
  });
}

tlgks_status tlgks_config_set_dx(tlgks_config* c, double dx) {
  if (!c) return fail(TLGKS_ERR_ARGUMENT, "null config");
  if (!(dx > 0.0)) return fail(TLGKS_ERR_ARGUMENT, "dx must be positive");
  c->cfg.dx = dx;
  return TLGKS_OK;
}

tlgks_status tlgks_config_set_t_end(tlgks_config* c, double t_end) {
  if (!c) return fail(TLGKS_ERR_ARGUMENT, "null config");
  if (!(t_end >= 0.0)) return fail(TLGKS_ERR_ARGUMENT, "t_end must be nonnegative");
  c->cfg.tEnd = t_end;
  return TLGKS_OK;
}

tlgks_status tlgks_config_set_chi(tlgks_config* c, double chi) {
  if (!c) return fail(TLGKS_ERR_ARGUMENT, "null config");
  if (!(chi > 0.0 && chi <= 1.0)) {
    return fail(TLGKS_ERR_ARGUMENT, "chi must lie in (0, 1]");
  }
  c->cfg.chi = chi;
  return TLGKS_OK;
}

tlgks_status tlgks_config_set_output(tlgks_config* c, const char* dir,
                                     double interval) {
  if (!c) return fail(TLGKS_ERR_ARGUMENT, "null config");
  if (!(interval >= 0.0)) return fail(TLGKS_ERR_ARGUMENT, "interval must be nonnegative");
  c->cfg.outDir = dir ? dir : "";
  c->cfg.outInterval = interval;
  return TLGKS_OK;
}

void tlgks_config_free(tlgks_config* c) { delete c; }

const char* tlgks_case_names(void) {
  static const std::string joined = [] {
    std::string s;
    for (const auto& n : tlgks::case_names()) {
      if (!s.empty()) s += '\n';
      s += n;
    }
    return s;
  }();
  return joined.c_str();
}

/* ---- meshes ---- */

tlgks_status tlgks_mesh_generate(double x0, double x1, double y0, double y1,
                                 double dx, const char* bc_left,
                                 const char* bc_right, const char* bc_bottom,
                                 const char* bc_top, tlgks_mesh** out) {
  if (!out) return fail(TLGKS_ERR_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    std::array<int, 4> tags{};
    const char* names[4] = {bc_left, bc_right, bc_bottom, bc_top};
    for (int i = 0; i < 4; ++i) {
      tags[i] = tlgks::bc_from_string(names[i] ? names[i] : "wall");
    }
    auto* m = new tlgks_mesh{tlgks::generate_structured(x0, x1, y0, y1, dx, tags)};
    *out = m;
  });
}

tlgks_status tlgks_mesh_load(const char* path, tlgks_mesh** out) {
  if (!path || !out) return fail(TLGKS_ERR_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    auto* m = new tlgks_mesh{tlgks::load_mesh(path)};
    *out = m;
  });
}

tlgks_status tlgks_mesh_save(const tlgks_mesh* m, const char* path) {
  if (!m || !path) return fail(TLGKS_ERR_ARGUMENT, "null argument");
  return guarded([&] { tlgks::save_mesh(m->mesh, path); });
}

tlgks_status tlgks_mesh_counts(const tlgks_mesh* m, int* nodes, int* cells,
                               int* edges) {
  if (!m) return fail(TLGKS_ERR_ARGUMENT, "null mesh");
  if (nodes) *nodes = m->mesh.num_nodes();
  if (cells) *cells = m->mesh.num_cells();
  if (edges) *edges = m->mesh.num_edges();
  return TLGKS_OK;
}

void tlgks_mesh_free(tlgks_mesh* m) { delete m; }

/* ---- solver ---- */

tlgks_status tlgks_solver_create(const tlgks_config* c, tlgks_solver** out) {
  if (!c || !out) return fail(TLGKS_ERR_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    auto* s = new tlgks_solver{tlgks::Solver(c->cfg)};
    *out = s;
  });
}

tlgks_status tlgks_solver_step(tlgks_solver* s, double* dt_taken) {
  if (!s) return fail(TLGKS_ERR_ARGUMENT, "null solver");
  return guarded([&] {
    const double dt = s->solver.compute_dt();
    s->solver.step(dt);
    if (dt_taken) *dt_taken = dt;
  });
}

tlgks_status tlgks_solver_advance(tlgks_solver* s, double t_target) {
  if (!s) return fail(TLGKS_ERR_ARGUMENT, "null solver");
  return guarded([&] { s->solver.advance_to(t_target); });
}

tlgks_status tlgks_solver_run(tlgks_solver* s) {
  if (!s) return fail(TLGKS_ERR_ARGUMENT, "null solver");
  return guarded([&] { s->solver.run(); });
}

double tlgks_solver_time(const tlgks_solver* s) {
  return s ? s->solver.time() : -1.0;
}

int tlgks_solver_num_cells(const tlgks_solver* s) {
  return s ? s->solver.mesh().num_cells() : -1;
}

tlgks_status tlgks_solver_get_field(const tlgks_solver* s, int layer, int comp,
                                    double* buf) {
  if (!s || !buf) return fail(TLGKS_ERR_ARGUMENT, "null argument");
  if (layer < 0 || layer > 1 || comp < 0 || comp > 2) {
    return fail(TLGKS_ERR_ARGUMENT, "layer must be 0..1 and comp 0..2");
  }
  const auto& avg = s->solver.avg(layer);
  for (size_t j = 0; j < avg.size(); ++j) buf[j] = avg[j][comp];
  return TLGKS_OK;
}

tlgks_status tlgks_solver_mass(const tlgks_solver* s, int layer, double* mass) {
  if (!s || !mass) return fail(TLGKS_ERR_ARGUMENT, "null argument");
  if (layer < 0 || layer > 1) return fail(TLGKS_ERR_ARGUMENT, "layer must be 0..1");
  return guarded([&] { *mass = s->solver.diagnostics().mass[layer]; });
}

tlgks_status tlgks_solver_error_l1(const tlgks_solver* s, double* err_h1,
                                   double* err_h2) {
  if (!s || !err_h1 || !err_h2) return fail(TLGKS_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    const auto& name = s->solver.config().caseName;
    const tlgks::CaseDef& cs = tlgks::find_case(name);
    if (!cs.hasAnalytic) {
      throw std::runtime_error("case '" + name + "' has no analytic solution");
    }
    const double t = s->solver.time();
    auto err = s->solver.l1_error_depths(
        [&](const tlgks::Vec2& x, double* out2) { cs.analytic(x, t, out2); });
    *err_h1 = err[0];
    *err_h2 = err[1];
  });
}

tlgks_status tlgks_solver_write_vtk(const tlgks_solver* s, const char* path) {
  if (!s || !path) return fail(TLGKS_ERR_ARGUMENT, "null argument");
  return guarded([&] { tlgks::dump_state_vtk(s->solver, path); });
}

tlgks_status tlgks_solver_write_centerline(const tlgks_solver* s,
                                           const char* path) {
  if (!s || !path) return fail(TLGKS_ERR_ARGUMENT, "null argument");
  return guarded([&] { tlgks::dump_centerline_csv(s->solver, path); });
}

void tlgks_solver_free(tlgks_solver* s) { delete s; }

/* ---- one-dimensional reference solver ---- */

tlgks_status tlgks_oracle1d(const char* case_name, int cells, double t_end,
                            double chi_override, const char* csv_path) {
  if (!case_name || !csv_path) return fail(TLGKS_ERR_ARGUMENT, "null argument");
  if (cells < 2) return fail(TLGKS_ERR_ARGUMENT, "cells must be at least 2");
  if (!(t_end >= 0.0)) return fail(TLGKS_ERR_ARGUMENT, "t_end must be nonnegative");
  return guarded([&] {
    tlgks::Problem1D prob = tlgks::oracle1d_problem_for_case(case_name);
    if (chi_override > 0.0) prob.chi = chi_override;
    tlgks::Solution1D sol = tlgks::oracle1d_run(prob, cells, t_end);
    tlgks::write_oracle_csv(csv_path, sol);
  });
}

}  // extern "C"
