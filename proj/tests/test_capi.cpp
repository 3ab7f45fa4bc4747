#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <tlgks/tlgks.h>

#include <cmath>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;

namespace {

fs::path temp_dir() {
  const fs::path d = fs::temp_directory_path() / "tlgks_capi_test";
  fs::create_directories(d);
  return d;
}

}  // namespace

TEST_CASE("library identifies itself") {
  REQUIRE(tlgks_version() != nullptr);
  CHECK(std::strlen(tlgks_version()) > 0);
  const char* names = tlgks_case_names();
  REQUIRE(names != nullptr);
  CHECK(std::string(names).find("accuracy") != std::string::npos);
  CHECK(std::string(names).find("riemann2") != std::string::npos);
}

TEST_CASE("bad arguments produce error codes and messages") {
  tlgks_config* cfg = nullptr;
  CHECK(tlgks_config_from_case("no_such_case", &cfg) != TLGKS_OK);
  CHECK(cfg == nullptr);
  CHECK(std::strlen(tlgks_last_error()) > 0);

  CHECK(tlgks_config_from_case(nullptr, &cfg) == TLGKS_ERR_ARGUMENT);
  CHECK(tlgks_config_from_case("accuracy", nullptr) == TLGKS_ERR_ARGUMENT);

  CHECK(tlgks_config_from_json("/no/such/file.json", &cfg) == TLGKS_ERR_IO);

  REQUIRE(tlgks_config_from_case("accuracy", &cfg) == TLGKS_OK);
  CHECK(tlgks_config_set_dx(cfg, -1.0) != TLGKS_OK);
  CHECK(tlgks_config_set_dx(nullptr, 0.1) == TLGKS_ERR_ARGUMENT);
  CHECK(tlgks_config_set_chi(cfg, 2.0) != TLGKS_OK);
  tlgks_config_free(cfg);

  tlgks_mesh* m = nullptr;
  CHECK(tlgks_mesh_generate(0, 1, 0, 1, 0.25, "wall", "diagonal", "wall",
                            "wall", &m) != TLGKS_OK);
  CHECK(m == nullptr);
  CHECK(tlgks_mesh_load("/no/such/mesh.txt", &m) == TLGKS_ERR_IO);

  // Free functions tolerate NULL.
  tlgks_config_free(nullptr);
  tlgks_mesh_free(nullptr);
  tlgks_solver_free(nullptr);
}

TEST_CASE("mesh generation, save, and load round trip") {
  tlgks_mesh* m = nullptr;
  REQUIRE(tlgks_mesh_generate(0, 2, 0, 1, 0.25, "wall", "free", "wall", "wall",
                              &m) == TLGKS_OK);
  int nn = 0, nc = 0, ne = 0;
  REQUIRE(tlgks_mesh_counts(m, &nn, &nc, &ne) == TLGKS_OK);
  CHECK(nn == 9 * 5);
  CHECK(nc == 8 * 4 * 2);
  CHECK(ne > 0);

  const fs::path p = temp_dir() / "mesh.txt";
  REQUIRE(tlgks_mesh_save(m, p.string().c_str()) == TLGKS_OK);
  tlgks_mesh* m2 = nullptr;
  REQUIRE(tlgks_mesh_load(p.string().c_str(), &m2) == TLGKS_OK);
  int nn2 = 0, nc2 = 0, ne2 = 0;
  REQUIRE(tlgks_mesh_counts(m2, &nn2, &nc2, &ne2) == TLGKS_OK);
  CHECK(nn2 == nn);
  CHECK(nc2 == nc);
  CHECK(ne2 == ne);
  tlgks_mesh_free(m2);
  tlgks_mesh_free(m);
}

TEST_CASE("solver lifecycle through the shared library") {
  tlgks_config* cfg = nullptr;
  REQUIRE(tlgks_config_from_case("accuracy", &cfg) == TLGKS_OK);
  REQUIRE(tlgks_config_set_dx(cfg, 0.25) == TLGKS_OK);
  REQUIRE(tlgks_config_set_t_end(cfg, 0.02) == TLGKS_OK);

  tlgks_solver* s = nullptr;
  REQUIRE(tlgks_solver_create(cfg, &s) == TLGKS_OK);
  CHECK(tlgks_solver_time(s) == 0.0);
  const int nc = tlgks_solver_num_cells(s);
  CHECK(nc == 8 * 8 * 2);

  double dt = 0.0;
  REQUIRE(tlgks_solver_step(s, &dt) == TLGKS_OK);
  CHECK(dt > 0.0);
  CHECK(tlgks_solver_time(s) == dt);
  REQUIRE(tlgks_solver_advance(s, 0.02) == TLGKS_OK);
  CHECK(tlgks_solver_time(s) == 0.02);

  std::vector<double> h1(nc), hu1(nc);
  REQUIRE(tlgks_solver_get_field(s, 0, 0, h1.data()) == TLGKS_OK);
  REQUIRE(tlgks_solver_get_field(s, 0, 1, hu1.data()) == TLGKS_OK);
  for (int j = 0; j < nc; ++j) {
    CHECK(h1[j] > 0.5);
    CHECK(h1[j] < 1.5);
  }
  CHECK(tlgks_solver_get_field(s, 2, 0, h1.data()) == TLGKS_ERR_ARGUMENT);
  CHECK(tlgks_solver_get_field(s, 0, 3, h1.data()) == TLGKS_ERR_ARGUMENT);
  CHECK(tlgks_solver_get_field(s, 0, 0, nullptr) == TLGKS_ERR_ARGUMENT);

  double mass = 0.0;
  REQUIRE(tlgks_solver_mass(s, 0, &mass) == TLGKS_OK);
  CHECK(mass > 0.0);

  double e1 = 0.0, e2 = 0.0;
  REQUIRE(tlgks_solver_error_l1(s, &e1, &e2) == TLGKS_OK);
  CHECK(e1 > 0.0);
  CHECK(e1 < 1e-3);
  CHECK(e2 > 0.0);

  const fs::path d = temp_dir();
  REQUIRE(tlgks_solver_write_vtk(s, (d / "s.vtk").string().c_str()) == TLGKS_OK);
  REQUIRE(tlgks_solver_write_centerline(s, (d / "c.csv").string().c_str()) ==
          TLGKS_OK);
  CHECK(fs::exists(d / "s.vtk"));
  CHECK(fs::exists(d / "c.csv"));

  tlgks_solver_free(s);
  tlgks_config_free(cfg);
}

TEST_CASE("error query fails for cases without an analytic solution") {
  tlgks_config* cfg = nullptr;
  REQUIRE(tlgks_config_from_case("riemann2", &cfg) == TLGKS_OK);
  REQUIRE(tlgks_config_set_dx(cfg, 0.5) == TLGKS_OK);
  tlgks_solver* s = nullptr;
  REQUIRE(tlgks_solver_create(cfg, &s) == TLGKS_OK);
  double e1 = 0.0, e2 = 0.0;
  CHECK(tlgks_solver_error_l1(s, &e1, &e2) != TLGKS_OK);
  CHECK(std::strlen(tlgks_last_error()) > 0);
  tlgks_solver_free(s);
  tlgks_config_free(cfg);
}

TEST_CASE("reference solver exports through the library") {
  const fs::path p = temp_dir() / "oracle.csv";
  REQUIRE(tlgks_oracle1d("riemann1", 80, 0.01, -1.0, p.string().c_str()) ==
          TLGKS_OK);
  std::ifstream in(p);
  REQUIRE(in.good());
  std::string line;
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 81);

  CHECK(tlgks_oracle1d("wellbalanced", 80, 0.01, -1.0,
                       (temp_dir() / "x.csv").string().c_str()) != TLGKS_OK);
  CHECK(tlgks_oracle1d("riemann1", 0, 0.01, -1.0,
                       (temp_dir() / "y.csv").string().c_str()) ==
        TLGKS_ERR_ARGUMENT);
}