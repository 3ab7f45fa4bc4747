#include "config.hpp"

#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "cases.hpp"

namespace tlgks {

int bc_from_string(const std::string& s) {
  if (s == "wall") return kWall;
  if (s == "free") return kFree;
  throw std::runtime_error("config: unknown boundary '" + s + "' (want wall|free)");
}

std::string bc_to_string(int tag) { return tag == kWall ? "wall" : "free"; }

Config config_for_case(const std::string& name) { return find_case(name).defaults; }

void validate_config(const Config& c) {
  if (c.meshMode != "generate" && c.meshMode != "file") {
    throw std::runtime_error("config: mesh.mode must be generate|file");
  }
  if (c.meshMode == "generate") {
    if (!(c.x1 > c.x0) || !(c.y1 > c.y0)) throw std::runtime_error("config: empty domain");
    if (!(c.dx > 0.0)) throw std::runtime_error("config: dx must be positive");
  } else if (c.meshPath.empty()) {
    throw std::runtime_error("config: mesh.mode=file needs mesh.path");
  }
  if (!(c.G > 0.0)) throw std::runtime_error("config: G must be positive");
  if (!(c.chi > 0.0) || c.chi > 1.0) throw std::runtime_error("config: chi must be in (0,1]");
  if (!(c.cfl > 0.0) || c.cfl > 1.0) throw std::runtime_error("config: cfl must be in (0,1]");
  if (!(c.tEnd >= 0.0)) throw std::runtime_error("config: t_end must be nonnegative");
  if (!(c.hMin > 0.0) || !(c.hDry >= c.hMin)) {
    throw std::runtime_error("config: need 0 < h_min <= h_dry");
  }
  if (!(c.velScale > 0.0)) throw std::runtime_error("config: erfc_vel_scale must be positive");
}

Config config_from_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("config: cannot open '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw std::runtime_error("config: JSON parse error in '" + path + "': " + e.what());
  }

  Config c;
  if (j.contains("case")) {
    c = config_for_case(j.at("case").get<std::string>());
  }

  if (j.contains("mesh")) {
    const auto& m = j.at("mesh");
    if (m.contains("mode")) c.meshMode = m.at("mode").get<std::string>();
    if (m.contains("domain")) {
      const auto& d = m.at("domain");
      if (!d.is_array() || d.size() != 4) {
        throw std::runtime_error("config: mesh.domain must be [x0,x1,y0,y1]");
      }
      c.x0 = d[0].get<double>();
      c.x1 = d[1].get<double>();
      c.y0 = d[2].get<double>();
      c.y1 = d[3].get<double>();
    }
    if (m.contains("dx")) c.dx = m.at("dx").get<double>();
    if (m.contains("path")) c.meshPath = m.at("path").get<std::string>();
  }
  if (j.contains("physics")) {
    const auto& p = j.at("physics");
    if (p.contains("G")) c.G = p.at("G").get<double>();
    if (p.contains("chi")) c.chi = p.at("chi").get<double>();
  }
  if (j.contains("numerics")) {
    const auto& n = j.at("numerics");
    if (n.contains("cfl")) c.cfl = n.at("cfl").get<double>();
    if (n.contains("t_end")) c.tEnd = n.at("t_end").get<double>();
    if (n.contains("eps_tau")) c.epsTau = n.at("eps_tau").get<double>();
    if (n.contains("c_num")) c.cNum = n.at("c_num").get<double>();
    if (n.contains("h_min")) c.hMin = n.at("h_min").get<double>();
    if (n.contains("h_dry")) c.hDry = n.at("h_dry").get<double>();
    if (n.contains("erfc_vel_scale")) c.velScale = n.at("erfc_vel_scale").get<double>();
  }
  if (j.contains("boundaries")) {
    const auto& b = j.at("boundaries");
    if (b.contains("left")) c.bc[0] = bc_from_string(b.at("left").get<std::string>());
    if (b.contains("right")) c.bc[1] = bc_from_string(b.at("right").get<std::string>());
    if (b.contains("bottom")) c.bc[2] = bc_from_string(b.at("bottom").get<std::string>());
    if (b.contains("top")) c.bc[3] = bc_from_string(b.at("top").get<std::string>());
  }
  if (j.contains("output")) {
    const auto& o = j.at("output");
    if (o.contains("dir")) c.outDir = o.at("dir").get<std::string>();
    if (o.contains("interval")) c.outInterval = o.at("interval").get<double>();
    if (o.contains("centerline_band")) c.centerlineBand = o.at("centerline_band").get<double>();
  }

  validate_config(c);
  return c;
}

}  // namespace tlgks
