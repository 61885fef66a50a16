// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "starris/common.hpp"

namespace starris {

/// Energy-splitting state of a single STAR-RIS element. The power fractions
/// are stored as the primal quantities; the complex coefficients are derived.
struct ElementCoefficients {
  double beta_r = 0.5;
  double beta_t = 0.5;
  double theta_r = 0.0;  // radians in [0, 2*pi)
  double theta_t = 0.0;

  cx v_r() const { return std::polar(std::sqrt(beta_r), theta_r); }
  cx v_t() const { return std::polar(std::sqrt(beta_t), theta_t); }
};

/// Per-surface energy-splitting coefficient state.
struct StarRisProfile {
  std::vector<ElementCoefficients> elements;

  int size() const { return static_cast<int>(elements.size()); }

  VectorXcd v_t() const {
    VectorXcd v(size());
    for (int n = 0; n < size(); ++n) v(n) = elements[n].v_t();
    return v;
  }
  VectorXcd v_r() const {
    VectorXcd v(size());
    for (int n = 0; n < size(); ++n) v(n) = elements[n].v_r();
    return v;
  }
};

struct EsViolation {
  int element = -1;
  std::string what;
};

struct EsReport {
  std::vector<EsViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks amplitude bounds, the unit power-sum coupling and phase ranges of
/// every element; reports all offending indices.
EsReport validate_es(const StarRisProfile& profile, double tol = 1e-9);

enum class BaselineKind { fixed_55, fixed_37, refl_trans_only };

BaselineKind baseline_kind_from_string(const std::string& name);
std::string to_string(BaselineKind kind);

/// Fixed-amplitude baseline profiles for a set of surfaces. Phases default to
/// zero; they stay free optimization variables in baseline runs (only the
/// amplitudes are frozen).
///  - fixed_55: beta_r = beta_t = 0.5 on every element
///  - fixed_37: beta_t = 0.3, beta_r = 0.7 on every element
///  - refl_trans_only: alternating pure modes, odd elements (1-based)
///    reflecting, even elements transmitting
std::vector<StarRisProfile> baseline_profile(
    BaselineKind kind, const std::vector<int>& element_counts,
    const std::vector<std::vector<double>>* theta_r = nullptr,
    const std::vector<std::vector<double>>* theta_t = nullptr);

/// Rebuild a profile from coefficient vectors: beta = |v|^2, theta = arg(v).
/// Throws std::invalid_argument when the per-element power sum deviates from
/// 1 by more than tol (message names the worst element).
StarRisProfile profile_from_vectors(const VectorXcd& v_t, const VectorXcd& v_r, double tol = 1e-9);

}  // namespace starris
