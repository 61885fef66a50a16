// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "starris/common.hpp"
#include "starris/scenario.hpp"

namespace starris {

/// Uniform linear array along the x-axis.
struct ArrayGeometry {
  int element_count = 1;
  double spacing = 0.5;  // element pitch in carrier wavelengths

  void validate() const {
    if (element_count < 1) throw std::invalid_argument("ArrayGeometry: element_count must be >= 1");
    if (!(spacing > 0.0)) throw std::invalid_argument("ArrayGeometry: spacing must be > 0");
  }
};

/// ULA array response for a given direction cosine against the x-axis.
/// Entry n is exp(j * 2*pi * spacing * n * direction_cosine); all entries are
/// unit modulus.
VectorXcd steering_vector(const ArrayGeometry& geometry, double direction_cosine);

/// Free-space path gain (linear power): ref_gain / d^2. The reference gain is
/// the attenuation at 1 m (default -20 dB -> 0.01).
double path_loss(double distance_m, double ref_gain_linear = 0.01);

/// Rank-one LoS channel between two x-axis ULAs:
///   H = sqrt(path_loss(d)) * a_rx(cos_rx) * a_tx(cos_tx)^H,
/// where each direction cosine is the x-component of the unit vector along
/// the link as seen from that end.
MatrixXcd los_channel(const Position3D& tx_pos, const ArrayGeometry& tx_geom,
                      const Position3D& rx_pos, const ArrayGeometry& rx_geom,
                      double ref_gain_linear = 0.01, double extra_phase = 0.0);

// All LoS channels of a scenario. Shapes:
//   bs_to_ris[k]            : N_k x N_0
//   bs_to_refl_user[j0]     : N_0 x 1
//   ris_to_trans_user[k][j] : N_k x 1
//   ris_to_refl_user[k][j0] : N_k x 1
struct ChannelSet {
  std::vector<MatrixXcd> bs_to_ris;
  std::vector<VectorXcd> bs_to_refl_user;
  std::vector<std::vector<VectorXcd>> ris_to_trans_user;
  std::vector<std::vector<VectorXcd>> ris_to_refl_user;
};

/// Deterministic function of (scenario, seed). The seed only matters when
/// scenario.random_link_phases is set, in which case every link gets an
/// independent common phase.
ChannelSet build_channel_set(const ScenarioSpec& scenario, std::uint64_t seed);

}  // namespace starris
