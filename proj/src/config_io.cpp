#include "taugrav/config_io.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <json.hpp>

namespace taugrav {

using nlohmann::json;

namespace {

Vec3 vec3_from(const json& j, const char* field) {
  if (!j.contains(field) || !j[field].is_array() || j[field].size() != 3)
    throw ConfigError(std::string("expected 3-vector field '") + field + "'");
  return Vec3(j[field][0].get<double>(), j[field][1].get<double>(),
              j[field][2].get<double>());
}

json vec3_to(const Vec3& v) { return json::array({v[0], v[1], v[2]}); }

double num(const json& j, const char* field) {
  if (!j.contains(field) || !j[field].is_number())
    throw ConfigError(std::string("expected numeric field '") + field + "'");
  return j[field].get<double>();
}

}  // namespace

json to_json(const Body& b) {
  json j;
  j["mass"] = b.mass;
  j["center"] = vec3_to(b.center);
  switch (b.shape) {
    case Body::Shape::Point:
      j["shape"] = "point";
      break;
    case Body::Shape::UniformBall:
      j["shape"] = "uniform_ball";
      j["radius"] = b.radius;
      break;
    case Body::Shape::Box:
      j["shape"] = "box";
      j["edge"] = b.edge;
      break;
    case Body::Shape::Cylinder:
      j["shape"] = "cylinder";
      j["radius"] = b.radius;
      j["length"] = b.length;
      j["axis"] = vec3_to(b.axis);
      break;
  }
  if (!b.label.empty()) j["label"] = b.label;
  return j;
}

Body body_from_json(const json& j) {
  const std::string shape = j.value("shape", "");
  const std::string label = j.value("label", "");
  if (shape == "point")
    return Body::point(num(j, "mass"), vec3_from(j, "center"), label);
  if (shape == "uniform_ball")
    return Body::uniform_ball(num(j, "mass"), num(j, "radius"),
                              vec3_from(j, "center"), label);
  if (shape == "box")
    return Body::box(num(j, "mass"), num(j, "edge"), vec3_from(j, "center"),
                     label);
  if (shape == "cylinder")
    return Body::cylinder(num(j, "mass"), num(j, "radius"), num(j, "length"),
                          vec3_from(j, "center"),
                          j.contains("axis") ? vec3_from(j, "axis")
                                             : Vec3::UnitZ(),
                          label);
  throw ConfigError("unknown body shape '" + shape + "'");
}

json to_json(const MassConfiguration& c) {
  json j = json::array();
  for (const auto& b : c.bodies) j.push_back(to_json(b));
  return j;
}

MassConfiguration mass_configuration_from_json(const json& j) {
  if (!j.is_array()) throw ConfigError("bodies must be a list");
  MassConfiguration c;
  for (const auto& jb : j) c.bodies.push_back(body_from_json(jb));
  c.validate();
  return c;
}

json to_json(const SuperpositionState& s) {
  json branches = json::array();
  for (const auto& br : s.branches)
    branches.push_back(
        json{{"weight", br.weight}, {"bodies", to_json(br.config)}});
  return json{{"branches", branches}};
}

SuperpositionState superposition_from_json(const json& j) {
  if (!j.contains("branches") || !j["branches"].is_array())
    throw ConfigError("superposition needs a 'branches' list");
  SuperpositionState s;
  for (const auto& jb : j["branches"])
    s.branches.push_back(SuperpositionBranch{
        num(jb, "weight"), mass_configuration_from_json(jb.at("bodies"))});
  s.validate();
  return s;
}

json to_json(const ProbeDensity& p) {
  json j;
  j["center"] = vec3_to(p.center);
  switch (p.shape) {
    case ProbeDensity::Shape::Point:
      j["shape"] = "point";
      j["mass"] = p.point_mass;
      break;
    case ProbeDensity::Shape::Slab:
      j["shape"] = "slab";
      j["density"] = p.density;
      j["size"] = vec3_to(2.0 * p.half_extent);
      break;
    case ProbeDensity::Shape::Ball:
      j["shape"] = "ball";
      j["density"] = p.density;
      j["radius"] = p.radius;
      break;
    case ProbeDensity::Shape::Cylinder:
      j["shape"] = "cylinder";
      j["density"] = p.density;
      j["radius"] = p.radius;
      j["length"] = p.length;
      j["axis"] = vec3_to(p.axis);
      break;
  }
  return j;
}

ProbeDensity probe_from_json(const json& j) {
  const std::string shape = j.value("shape", "");
  if (shape == "point")
    return ProbeDensity::point(num(j, "mass"), vec3_from(j, "center"));
  if (shape == "slab")
    return ProbeDensity::slab(num(j, "density"), vec3_from(j, "size"),
                              vec3_from(j, "center"));
  if (shape == "ball")
    return ProbeDensity::ball(num(j, "density"), num(j, "radius"),
                              vec3_from(j, "center"));
  if (shape == "cylinder")
    return ProbeDensity::cylinder(num(j, "density"), num(j, "radius"),
                                  num(j, "length"), vec3_from(j, "center"),
                                  j.contains("axis") ? vec3_from(j, "axis")
                                                     : Vec3::UnitZ());
  throw ConfigError("unknown probe shape '" + shape + "'");
}

json to_json(const ExperimentEntry& e) {
  json j;
  j["name"] = e.name;
  if (e.superposition) j["superposition"] = to_json(*e.superposition);
  if (e.probe) j["probe"] = to_json(*e.probe);
  if (e.interferometer_gain_db)
    j["interferometer"] = json{{"gain_db", *e.interferometer_gain_db}};
  if (e.flight_time) j["flight_time"] = *e.flight_time;
  if (e.table_tau) j["table_tau"] = *e.table_tau;
  j["provenance_notes"] = e.provenance_notes;
  return j;
}

ExperimentEntry entry_from_json(const json& j) {
  ExperimentEntry e;
  e.name = j.value("name", "");
  if (j.contains("superposition"))
    e.superposition = superposition_from_json(j["superposition"]);
  if (j.contains("probe")) e.probe = probe_from_json(j["probe"]);
  if (j.contains("interferometer"))
    e.interferometer_gain_db = num(j["interferometer"], "gain_db");
  if (j.contains("flight_time")) e.flight_time = j["flight_time"].get<double>();
  if (j.contains("table_tau")) e.table_tau = j["table_tau"].get<double>();
  e.provenance_notes = j.value("provenance_notes", "");
  e.validate();
  return e;
}

ExperimentEntry load_entry(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& err) {
    throw ConfigError(path + ": " + err.what());
  }
  try {
    return entry_from_json(j);
  } catch (const json::exception& err) {
    throw ConfigError(path + ": " + err.what());
  }
}

std::vector<ExperimentEntry> load_catalog_dir(const std::string& dir) {
  namespace fs = std::filesystem;
  std::vector<fs::path> files;
  for (const auto& p : fs::directory_iterator(dir))
    if (p.path().extension() == ".json") files.push_back(p.path());
  std::sort(files.begin(), files.end());
  std::vector<ExperimentEntry> entries;
  for (const auto& f : files) entries.push_back(load_entry(f.string()));
  return entries;
}

void save_entry(const ExperimentEntry& e, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write config file: " + path);
  out << to_json(e).dump(2) << "\n";
}

}  // namespace taugrav
