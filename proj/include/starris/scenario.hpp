// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "starris/common.hpp"

namespace starris {

struct Position3D {
  double x = 0.0, y = 0.0, z = 0.0;

  double distance_to(const Position3D& o) const {
    const double dx = x - o.x, dy = y - o.y, dz = z - o.z;
    return std::sqrt(dx * dx + dy * dy + dz * dz);
  }
  bool finite() const {
    return std::isfinite(x) && std::isfinite(y) && std::isfinite(z);
  }
};

/// Interior-point solver knobs, carried inside the scenario file.
struct SolverOptions {
  double tol = 1e-8;
  int max_iter = 100;
};

/// Outer-loop knobs, carried inside the scenario file.
struct BcdOptions {
  double epsilon = 1e-3;            // relative objective tolerance
  int max_outer_iterations = 50;
  int randomization_samples = 100;  // Gaussian randomization draws per recovery
  double rank_one_defect_tol = 1e-4;
};

struct StarRisSpec {
  Position3D position;
  int element_count = 0;
  double spacing = 0.5;  // in carrier wavelengths
};

struct ReflectionUserSpec {
  Position3D position;
  double r_min = 0.0;  // bits/s/Hz
};

struct TransmissionGroupSpec {
  int ris_index = -1;  // 0-based index into star_ris
  double r_min = 0.0;  // bits/s/Hz, shared by the whole multicast group
  std::vector<Position3D> user_positions;
};

// Full declarative description of one experiment: BS, surfaces, user groups,
// budgets, thresholds and solver settings. Everything downstream is a pure
// function of this struct plus a seed.
struct ScenarioSpec {
  int format_version = 1;

  Position3D bs_position;
  int bs_antenna_count = 1;
  double bs_spacing = 0.5;

  std::vector<StarRisSpec> star_ris;
  std::vector<ReflectionUserSpec> reflection_users;
  std::vector<TransmissionGroupSpec> transmission_groups;

  double p_t_watts = 0.1;
  double noise_dbw = -140.0;
  double pathloss_ref_db = -20.0;

  // Optional per-link common phase drawn from the seed (off by default so
  // identical scenarios produce identical channels).
  bool random_link_phases = false;

  std::uint64_t seed = 1;
  SolverOptions solver;
  BcdOptions bcd;

  int surface_count() const { return static_cast<int>(star_ris.size()); }
  int group_count() const { return static_cast<int>(transmission_groups.size()); }
  int reflection_user_count() const { return static_cast<int>(reflection_users.size()); }
  int transmission_user_count() const {
    int n = 0;
    for (const auto& g : transmission_groups) n += static_cast<int>(g.user_positions.size());
    return n;
  }
  int user_count() const { return transmission_user_count() + reflection_user_count(); }
  /// Number of BS data streams: one multicast stream per group plus one
  /// unicast stream per reflection user.
  int stream_count() const { return group_count() + reflection_user_count(); }
  double noise_power_watts() const { return db_to_linear(noise_dbw); }
  double pathloss_ref_linear() const { return db_to_linear(pathloss_ref_db); }

  /// Throws ValidationError listing every violation found.
  void validate() const;
};

/// Parse + validate a scenario file (JSON). Throws ValidationError on
/// malformed or inconsistent input.
ScenarioSpec load_scenario(const std::string& path);

ScenarioSpec scenario_from_json_text(const std::string& text);
std::string scenario_to_json_text(const ScenarioSpec& s);

}  // namespace starris
