// Command line front end. Links only the public C interface.

#include <cmath>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tlgks/tlgks.h"

namespace {

int die(tlgks_status st, const char* what) {
  std::fprintf(stderr, "error: %s: %s\n", what, tlgks_last_error());
  return static_cast<int>(st);
}

int run_config(const std::string& path) {
  tlgks_config* cfg = nullptr;
  tlgks_status st = tlgks_config_from_json(path.c_str(), &cfg);
  if (st != TLGKS_OK) return die(st, "config");
  tlgks_solver* s = nullptr;
  st = tlgks_solver_create(cfg, &s);
  tlgks_config_free(cfg);
  if (st != TLGKS_OK) return die(st, "solver setup");
  st = tlgks_solver_run(s);
  if (st != TLGKS_OK) {
    tlgks_solver_free(s);
    return die(st, "run");
  }
  std::printf("finished at t = %.6g (%d cells)\n", tlgks_solver_time(s),
              tlgks_solver_num_cells(s));
  tlgks_solver_free(s);
  return 0;
}

int run_case(const std::string& name, double dx, double tEnd, double chi,
             const std::string& outDir, double interval) {
  tlgks_config* cfg = nullptr;
  tlgks_status st = tlgks_config_from_case(name.c_str(), &cfg);
  if (st != TLGKS_OK) return die(st, "case");
  if (dx > 0.0 && (st = tlgks_config_set_dx(cfg, dx)) != TLGKS_OK) {
    tlgks_config_free(cfg);
    return die(st, "dx");
  }
  if (tEnd >= 0.0 && (st = tlgks_config_set_t_end(cfg, tEnd)) != TLGKS_OK) {
    tlgks_config_free(cfg);
    return die(st, "tend");
  }
  if (chi > 0.0 && (st = tlgks_config_set_chi(cfg, chi)) != TLGKS_OK) {
    tlgks_config_free(cfg);
    return die(st, "chi");
  }
  st = tlgks_config_set_output(cfg, outDir.c_str(), interval);
  if (st != TLGKS_OK) {
    tlgks_config_free(cfg);
    return die(st, "output");
  }
  tlgks_solver* s = nullptr;
  st = tlgks_solver_create(cfg, &s);
  tlgks_config_free(cfg);
  if (st != TLGKS_OK) return die(st, "solver setup");
  st = tlgks_solver_run(s);
  if (st != TLGKS_OK) {
    tlgks_solver_free(s);
    return die(st, "run");
  }
  std::printf("case %s finished at t = %.6g (%d cells), output in %s\n",
              name.c_str(), tlgks_solver_time(s), tlgks_solver_num_cells(s),
              outDir.c_str());
  tlgks_solver_free(s);
  return 0;
}

int run_mesh_gen(const std::vector<double>& domain, double dx,
                 const std::vector<std::string>& bc, const std::string& out) {
  tlgks_mesh* m = nullptr;
  tlgks_status st =
      tlgks_mesh_generate(domain[0], domain[1], domain[2], domain[3], dx,
                          bc[0].c_str(), bc[1].c_str(), bc[2].c_str(),
                          bc[3].c_str(), &m);
  if (st != TLGKS_OK) return die(st, "mesh gen");
  st = tlgks_mesh_save(m, out.c_str());
  if (st != TLGKS_OK) {
    tlgks_mesh_free(m);
    return die(st, "mesh save");
  }
  int nodes = 0, cells = 0, edges = 0;
  tlgks_mesh_counts(m, &nodes, &cells, &edges);
  std::printf("wrote %s: %d nodes, %d cells, %d edges\n", out.c_str(), nodes,
              cells, edges);
  tlgks_mesh_free(m);
  return 0;
}

int run_convergence(const std::string& name, int levels, double dx0) {
  std::vector<double> e1(levels), e2(levels), dxs(levels);
  for (int k = 0; k < levels; ++k) {
    tlgks_config* cfg = nullptr;
    tlgks_status st = tlgks_config_from_case(name.c_str(), &cfg);
    if (st != TLGKS_OK) return die(st, "case");
    dxs[k] = dx0 / std::pow(2.0, k);
    if ((st = tlgks_config_set_dx(cfg, dxs[k])) != TLGKS_OK) {
      tlgks_config_free(cfg);
      return die(st, "dx");
    }
    tlgks_solver* s = nullptr;
    st = tlgks_solver_create(cfg, &s);
    tlgks_config_free(cfg);
    if (st != TLGKS_OK) return die(st, "solver setup");
    if ((st = tlgks_solver_run(s)) != TLGKS_OK) {
      tlgks_solver_free(s);
      return die(st, "run");
    }
    st = tlgks_solver_error_l1(s, &e1[k], &e2[k]);
    tlgks_solver_free(s);
    if (st != TLGKS_OK) return die(st, "error norm");
  }

  std::printf("%-10s %-14s %-8s %-14s %-8s\n", "dx", "L1(h1)", "order",
              "L1(h2)", "order");
  double sum1 = 0.0, sum2 = 0.0;
  for (int k = 0; k < levels; ++k) {
    if (k == 0) {
      std::printf("%-10.6g %-14.6e %-8s %-14.6e %-8s\n", dxs[k], e1[k], "-",
                  e2[k], "-");
    } else {
      const double o1 = std::log2(e1[k - 1] / e1[k]);
      const double o2 = std::log2(e2[k - 1] / e2[k]);
      sum1 += o1;
      sum2 += o2;
      std::printf("%-10.6g %-14.6e %-8.3f %-14.6e %-8.3f\n", dxs[k], e1[k], o1,
                  e2[k], o2);
    }
  }
  if (levels > 1) {
    std::printf("mean order: h1 %.3f, h2 %.3f\n", sum1 / (levels - 1),
                sum2 / (levels - 1));
  }
  return 0;
}

int run_oracle(const std::string& name, int cells, double tEnd, double chi,
               const std::string& out) {
  static const std::map<std::string, double> defaultT = {
      {"riemann1", 0.1}, {"riemann2", 1.0}, {"dambreak", 0.08},
      {"channel", 1.0},  {"circular", 4.0},
  };
  double t = tEnd;
  if (t < 0.0) {
    auto it = defaultT.find(name);
    if (it == defaultT.end()) {
      std::fprintf(stderr, "error: no default end time for '%s'; pass --tend\n",
                   name.c_str());
      return 1;
    }
    t = it->second;
  }
  tlgks_status st = tlgks_oracle1d(name.c_str(), cells, t, chi, out.c_str());
  if (st != TLGKS_OK) return die(st, "oracle");
  std::printf("wrote %s (%d cells, t = %.6g)\n", out.c_str(), cells, t);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "two-layer shallow water solver (gas-kinetic fluxes, compact "
      "high-order reconstruction)"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(tlgks_version()));

  // run --config FILE
  auto* cmdRun = app.add_subcommand("run", "run a simulation from a JSON config");
  std::string configPath;
  cmdRun->add_option("--config", configPath, "JSON config file")
      ->required()
      ->check(CLI::ExistingFile);

  // case NAME [--dx --tend --chi --out --interval]
  auto* cmdCase = app.add_subcommand("case", "run a built-in case");
  std::string caseName;
  double caseDx = -1.0, caseTend = -1.0, caseChi = -1.0, caseInterval = 0.0;
  std::string caseOut;
  cmdCase->add_option("name", caseName, std::string("one of:\n") + tlgks_case_names())
      ->required();
  cmdCase->add_option("--dx", caseDx, "override mesh spacing");
  cmdCase->add_option("--tend", caseTend, "override end time");
  cmdCase->add_option("--chi", caseChi, "override density ratio");
  cmdCase->add_option("--out", caseOut, "output directory (default out_<name>)");
  cmdCase->add_option("--interval", caseInterval, "output interval (0: final only)");

  // mesh gen --domain x0,x1,y0,y1 --dx --out [--bc l,r,b,t]
  auto* cmdMesh = app.add_subcommand("mesh", "mesh tools");
  auto* cmdGen = cmdMesh->add_subcommand("gen", "generate a structured triangulation");
  std::vector<double> domain;
  double meshDx = 0.0;
  std::string meshOut;
  std::vector<std::string> meshBc = {"wall", "wall", "wall", "wall"};
  cmdGen->add_option("--domain", domain, "x0,x1,y0,y1")
      ->required()
      ->delimiter(',')
      ->expected(4);
  cmdGen->add_option("--dx", meshDx, "target spacing")->required();
  cmdGen->add_option("--out", meshOut, "output mesh file")->required();
  cmdGen->add_option("--bc", meshBc, "tags left,right,bottom,top (wall|free)")
      ->delimiter(',')
      ->expected(4);

  // convergence --case accuracy --levels 4
  auto* cmdConv = app.add_subcommand("convergence", "grid refinement study");
  std::string convCase = "accuracy";
  int levels = 4;
  double dx0 = 0.125;
  cmdConv->add_option("--case", convCase, "case with an exact solution");
  cmdConv->add_option("--levels", levels, "number of refinement levels")
      ->check(CLI::PositiveNumber);
  cmdConv->add_option("--dx0", dx0, "coarsest spacing");

  // oracle --case riemann1 --cells 5000
  auto* cmdOracle = app.add_subcommand("oracle", "1-D reference solution to CSV");
  std::string oracleCase;
  int oracleCells = 5000;
  double oracleTend = -1.0, oracleChi = -1.0;
  std::string oracleOut;
  cmdOracle->add_option("--case", oracleCase, "case with a 1-D reduction")->required();
  cmdOracle->add_option("--cells", oracleCells, "grid cells")->check(CLI::PositiveNumber);
  cmdOracle->add_option("--tend", oracleTend, "end time (default: case end time)");
  cmdOracle->add_option("--chi", oracleChi, "override density ratio");
  cmdOracle->add_option("--out", oracleOut, "CSV path (default oracle_<case>.csv)");

  CLI11_PARSE(app, argc, argv);

  if (cmdRun->parsed()) return run_config(configPath);
  if (cmdCase->parsed()) {
    if (caseOut.empty()) caseOut = "out_" + caseName;
    return run_case(caseName, caseDx, caseTend, caseChi, caseOut, caseInterval);
  }
  if (cmdMesh->parsed()) {
    if (!cmdGen->parsed()) {
      std::fprintf(stderr, "error: mesh requires the 'gen' subcommand\n");
      return 1;
    }
    return run_mesh_gen(domain, meshDx, meshBc, meshOut);
  }
  if (cmdConv->parsed()) return run_convergence(convCase, levels, dx0);
  if (cmdOracle->parsed()) {
    if (oracleOut.empty()) oracleOut = "oracle_" + oracleCase + ".csv";
    return run_oracle(oracleCase, oracleCells, oracleTend, oracleChi, oracleOut);
  }
  return 0;
}
