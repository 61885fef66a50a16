// SPDX-License-Identifier: Apache-2.0
#include "starris/scenario.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace starris {

using nlohmann::json;

void ScenarioSpec::validate() const {
  std::vector<std::string> issues;
  auto bad = [&issues](const std::string& msg) { issues.push_back(msg); };

  if (format_version != 1) bad("format_version: only version 1 is supported");
  if (!bs_position.finite()) bad("bs.position: coordinates must be finite");
  if (bs_antenna_count < 1) bad("bs.antenna_count: must be >= 1");
  if (!(bs_spacing > 0.0)) bad("bs.spacing: must be > 0");

  for (size_t k = 0; k < star_ris.size(); ++k) {
    const auto& r = star_ris[k];
    const std::string tag = "star_ris[" + std::to_string(k) + "]";
    if (!r.position.finite()) bad(tag + ".position: coordinates must be finite");
    if (r.element_count < 1) bad(tag + ".element_count: must be >= 1");
    if (!(r.spacing > 0.0)) bad(tag + ".spacing: must be > 0");
  }

  for (size_t j = 0; j < reflection_users.size(); ++j) {
    const auto& u = reflection_users[j];
    const std::string tag = "reflection_users[" + std::to_string(j) + "]";
    if (!u.position.finite()) bad(tag + ".position: coordinates must be finite");
    if (u.r_min < 0.0) bad(tag + ".r_min: must be >= 0");
  }

  std::vector<bool> surface_taken(star_ris.size(), false);
  for (size_t g = 0; g < transmission_groups.size(); ++g) {
    const auto& grp = transmission_groups[g];
    const std::string tag = "transmission_groups[" + std::to_string(g) + "]";
    if (grp.ris_index < 0 || grp.ris_index >= surface_count()) {
      bad(tag + ".ris_index: " + std::to_string(grp.ris_index) + " does not name a STAR-RIS (K=" +
          std::to_string(surface_count()) + ")");
    } else if (surface_taken[grp.ris_index]) {
      bad(tag + ".ris_index: STAR-RIS " + std::to_string(grp.ris_index) +
          " already serves another transmission group");
    } else {
      surface_taken[grp.ris_index] = true;
    }
    if (grp.r_min < 0.0) bad(tag + ".r_min: must be >= 0");
    if (grp.user_positions.empty()) bad(tag + ".user_positions: group must have at least one user");
    for (size_t j = 0; j < grp.user_positions.size(); ++j)
      if (!grp.user_positions[j].finite())
        bad(tag + ".user_positions[" + std::to_string(j) + "]: coordinates must be finite");
  }

  if (!(p_t_watts > 0.0)) bad("p_t_watts: must be > 0");
  if (!std::isfinite(noise_dbw)) bad("noise_dbw: must be finite");
  if (!std::isfinite(pathloss_ref_db)) bad("pathloss_ref_db: must be finite");
  if (!(solver.tol > 0.0)) bad("solver.tol: must be > 0");
  if (solver.max_iter < 1) bad("solver.max_iter: must be >= 1");
  if (!(bcd.epsilon > 0.0)) bad("bcd.epsilon: must be > 0");
  if (bcd.max_outer_iterations < 1) bad("bcd.max_outer_iterations: must be >= 1");
  if (bcd.randomization_samples < 1) bad("bcd.randomization_samples: must be >= 1");
  if (user_count() < 1) bad("scenario must contain at least one user");

  if (!issues.empty()) throw ValidationError(std::move(issues));
}

namespace {

Position3D parse_position(const json& j, const std::string& field) {
  if (!j.is_array() || j.size() != 3)
    throw ValidationError({field + ": expected [x, y, z]"});
  Position3D p;
  p.x = j[0].get<double>();
  p.y = j[1].get<double>();
  p.z = j[2].get<double>();
  return p;
}

json position_to_json(const Position3D& p) { return json::array({p.x, p.y, p.z}); }

template <typename T>
T require(const json& j, const std::string& field) {
  if (!j.contains(field)) throw ValidationError({"missing required field: " + field});
  try {
    return j.at(field).get<T>();
  } catch (const json::exception& e) {
    throw ValidationError({field + ": " + e.what()});
  }
}

}  // namespace

ScenarioSpec scenario_from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError({std::string("JSON parse error: ") + e.what()});
  }

  ScenarioSpec s;
  s.format_version = require<int>(j, "format_version");

  if (!j.contains("bs")) throw ValidationError({"missing required field: bs"});
  const json& bs = j.at("bs");
  if (!bs.contains("position")) throw ValidationError({"missing required field: bs.position"});
  s.bs_position = parse_position(bs.at("position"), "bs.position");
  s.bs_antenna_count = require<int>(bs, "antenna_count");
  s.bs_spacing = bs.value("spacing", 0.5);

  for (const auto& r : j.value("star_ris", json::array())) {
    StarRisSpec spec;
    spec.position = parse_position(require<json>(r, "position"), "star_ris.position");
    spec.element_count = require<int>(r, "element_count");
    spec.spacing = r.value("spacing", 0.5);
    s.star_ris.push_back(spec);
  }

  for (const auto& u : j.value("reflection_users", json::array())) {
    ReflectionUserSpec spec;
    spec.position = parse_position(require<json>(u, "position"), "reflection_users.position");
    spec.r_min = require<double>(u, "r_min");
    s.reflection_users.push_back(spec);
  }

  for (const auto& g : j.value("transmission_groups", json::array())) {
    TransmissionGroupSpec spec;
    spec.ris_index = require<int>(g, "ris_index");
    spec.r_min = require<double>(g, "r_min");
    for (const auto& p : require<json>(g, "user_positions"))
      spec.user_positions.push_back(parse_position(p, "transmission_groups.user_positions"));
    s.transmission_groups.push_back(spec);
  }

  s.p_t_watts = require<double>(j, "p_t_watts");
  s.noise_dbw = require<double>(j, "noise_dbw");
  s.pathloss_ref_db = j.value("pathloss_ref_db", -20.0);
  s.random_link_phases = j.value("random_link_phases", false);
  s.seed = j.value("seed", std::uint64_t{1});

  if (j.contains("solver")) {
    s.solver.tol = j.at("solver").value("tol", s.solver.tol);
    s.solver.max_iter = j.at("solver").value("max_iter", s.solver.max_iter);
  }
  if (j.contains("bcd")) {
    const auto& b = j.at("bcd");
    s.bcd.epsilon = b.value("epsilon", s.bcd.epsilon);
    s.bcd.max_outer_iterations = b.value("max_outer_iterations", s.bcd.max_outer_iterations);
    s.bcd.randomization_samples = b.value("randomization_samples", s.bcd.randomization_samples);
    s.bcd.rank_one_defect_tol = b.value("rank_one_defect_tol", s.bcd.rank_one_defect_tol);
  }

  s.validate();
  return s;
}

std::string scenario_to_json_text(const ScenarioSpec& s) {
  json j;
  j["format_version"] = s.format_version;
  j["bs"] = {{"position", position_to_json(s.bs_position)},
             {"antenna_count", s.bs_antenna_count},
             {"spacing", s.bs_spacing}};
  j["star_ris"] = json::array();
  for (const auto& r : s.star_ris)
    j["star_ris"].push_back({{"position", position_to_json(r.position)},
                             {"element_count", r.element_count},
                             {"spacing", r.spacing}});
  j["reflection_users"] = json::array();
  for (const auto& u : s.reflection_users)
    j["reflection_users"].push_back({{"position", position_to_json(u.position)}, {"r_min", u.r_min}});
  j["transmission_groups"] = json::array();
  for (const auto& g : s.transmission_groups) {
    json positions = json::array();
    for (const auto& p : g.user_positions) positions.push_back(position_to_json(p));
    j["transmission_groups"].push_back(
        {{"ris_index", g.ris_index}, {"r_min", g.r_min}, {"user_positions", positions}});
  }
  j["p_t_watts"] = s.p_t_watts;
  j["noise_dbw"] = s.noise_dbw;
  j["pathloss_ref_db"] = s.pathloss_ref_db;
  j["random_link_phases"] = s.random_link_phases;
  j["seed"] = s.seed;
  j["solver"] = {{"tol", s.solver.tol}, {"max_iter", s.solver.max_iter}};
  j["bcd"] = {{"epsilon", s.bcd.epsilon},
              {"max_outer_iterations", s.bcd.max_outer_iterations},
              {"randomization_samples", s.bcd.randomization_samples},
              {"rank_one_defect_tol", s.bcd.rank_one_defect_tol}};
  return j.dump(2);
}

ScenarioSpec load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError({"cannot open scenario file: " + path});
  std::stringstream buf;
  buf << in.rdbuf();
  return scenario_from_json_text(buf.str());
}

}  // namespace starris
