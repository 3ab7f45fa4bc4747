#ifndef TLGKS_H
#define TLGKS_H

/* C interface to the two-layer gas-kinetic shallow water solver.
 *
 * All functions returning tlgks_status report failures through the return
 * code; tlgks_last_error() gives a thread-local message for the most recent
 * failure on the calling thread. Objects are created through out-parameters
 * and released with the matching _free call; _free accepts NULL.
 */

#include <stddef.h>

#if defined(_WIN32)
#define TLGKS_API __declspec(dllexport)
#else
#define TLGKS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tlgks_status {
  TLGKS_OK = 0,
  TLGKS_ERR_ARGUMENT = 1, /* bad handle, name, or parameter value */
  TLGKS_ERR_RUNTIME = 2,  /* solver or mesh failure */
  TLGKS_ERR_IO = 3        /* file could not be read or written */
} tlgks_status;

typedef struct tlgks_config tlgks_config;
typedef struct tlgks_mesh tlgks_mesh;
typedef struct tlgks_solver tlgks_solver;

TLGKS_API const char* tlgks_version(void);
TLGKS_API const char* tlgks_last_error(void);

/* ---- configuration ---- */

/* Defaults of a built-in case; see tlgks_case_names for valid names. */
TLGKS_API tlgks_status tlgks_config_from_case(const char* name, tlgks_config** out);
/* Parses a JSON config file (a "case" key pulls case defaults first). */
TLGKS_API tlgks_status tlgks_config_from_json(const char* path, tlgks_config** out);
TLGKS_API tlgks_status tlgks_config_set_dx(tlgks_config* c, double dx);
TLGKS_API tlgks_status tlgks_config_set_t_end(tlgks_config* c, double t_end);
TLGKS_API tlgks_status tlgks_config_set_chi(tlgks_config* c, double chi);
TLGKS_API tlgks_status tlgks_config_set_output(tlgks_config* c, const char* dir,
                                               double interval);
TLGKS_API void tlgks_config_free(tlgks_config* c);

/* Newline-separated list of built-in case names (static storage). */
TLGKS_API const char* tlgks_case_names(void);

/* ---- meshes ---- */

/* Structured triangulation of [x0,x1]x[y0,y1] with spacing dx; boundary
 * tags are "wall" or "free" in the order left, right, bottom, top. */
TLGKS_API tlgks_status tlgks_mesh_generate(double x0, double x1, double y0,
                                           double y1, double dx,
                                           const char* bc_left,
                                           const char* bc_right,
                                           const char* bc_bottom,
                                           const char* bc_top,
                                           tlgks_mesh** out);
TLGKS_API tlgks_status tlgks_mesh_load(const char* path, tlgks_mesh** out);
TLGKS_API tlgks_status tlgks_mesh_save(const tlgks_mesh* m, const char* path);
TLGKS_API tlgks_status tlgks_mesh_counts(const tlgks_mesh* m, int* nodes,
                                         int* cells, int* edges);
TLGKS_API void tlgks_mesh_free(tlgks_mesh* m);

/* ---- solver ---- */

/* Builds mesh, topography, reconstruction, and initial state per config. */
TLGKS_API tlgks_status tlgks_solver_create(const tlgks_config* c, tlgks_solver** out);
/* One CFL-limited time step; *dt_taken may be NULL. */
TLGKS_API tlgks_status tlgks_solver_step(tlgks_solver* s, double* dt_taken);
/* CFL-limited steps, clipped to land on t_target exactly. */
TLGKS_API tlgks_status tlgks_solver_advance(tlgks_solver* s, double t_target);
/* Full case protocol: periodic output when configured, final state files. */
TLGKS_API tlgks_status tlgks_solver_run(tlgks_solver* s);
TLGKS_API double tlgks_solver_time(const tlgks_solver* s);
TLGKS_API int tlgks_solver_num_cells(const tlgks_solver* s);
/* Copies one conserved component into buf[num_cells]. layer: 0 lower,
 * 1 upper; comp: 0 depth, 1 x-discharge, 2 y-discharge. */
TLGKS_API tlgks_status tlgks_solver_get_field(const tlgks_solver* s, int layer,
                                              int comp, double* buf);
TLGKS_API tlgks_status tlgks_solver_mass(const tlgks_solver* s, int layer,
                                         double* mass);
/* Mean-absolute depth errors against the case analytic solution at the
 * current time; fails for cases without one. */
TLGKS_API tlgks_status tlgks_solver_error_l1(const tlgks_solver* s, double* err_h1,
                                             double* err_h2);
TLGKS_API tlgks_status tlgks_solver_write_vtk(const tlgks_solver* s,
                                              const char* path);
TLGKS_API tlgks_status tlgks_solver_write_centerline(const tlgks_solver* s,
                                                     const char* path);
TLGKS_API void tlgks_solver_free(tlgks_solver* s);

/* ---- one-dimensional reference solver ---- */

/* First-order reference solution of a case's 1-D (or radial) reduction,
 * written as CSV. chi_override <= 0 keeps the case default. */
TLGKS_API tlgks_status tlgks_oracle1d(const char* case_name, int cells,
                                      double t_end, double chi_override,
                                      const char* csv_path);

#ifdef __cplusplus
}
#endif

#endif /* TLGKS_H */
