// SPDX-License-Identifier: Apache-2.0
#include "starris/geometry.hpp"

#include "starris/rng.hpp"

namespace starris {

VectorXcd steering_vector(const ArrayGeometry& geometry, double direction_cosine) {
  geometry.validate();
  if (!(direction_cosine >= -1.0 && direction_cosine <= 1.0))
    throw std::invalid_argument("steering_vector: direction cosine must lie in [-1, 1]");
  VectorXcd a(geometry.element_count);
  const double step = kTwoPi * geometry.spacing * direction_cosine;
  for (int n = 0; n < geometry.element_count; ++n) a(n) = std::polar(1.0, step * n);
  return a;
}

double path_loss(double distance_m, double ref_gain_linear) {
  if (!(distance_m > 0.0)) throw std::invalid_argument("path_loss: distance must be > 0");
  return ref_gain_linear / (distance_m * distance_m);
}

MatrixXcd los_channel(const Position3D& tx_pos, const ArrayGeometry& tx_geom,
                      const Position3D& rx_pos, const ArrayGeometry& rx_geom,
                      double ref_gain_linear, double extra_phase) {
  const double d = tx_pos.distance_to(rx_pos);
  if (!(d > 0.0)) throw std::invalid_argument("los_channel: coincident tx/rx positions");

  // Direction cosine against the x-axis, taken from each end's point of view.
  const double cos_tx = (rx_pos.x - tx_pos.x) / d;
  const double cos_rx = (tx_pos.x - rx_pos.x) / d;

  const VectorXcd a_tx = steering_vector(tx_geom, cos_tx);
  const VectorXcd a_rx = steering_vector(rx_geom, cos_rx);
  const cx amp = std::polar(std::sqrt(path_loss(d, ref_gain_linear)), extra_phase);
  return amp * (a_rx * a_tx.adjoint());
}

ChannelSet build_channel_set(const ScenarioSpec& scenario, std::uint64_t seed) {
  Rng rng(seed);
  auto link_phase = [&]() {
    // Draw unconditionally so channel values stay aligned with the stream
    // regardless of the flag; apply only when requested.
    const double p = rng.uniform() * kTwoPi;
    return scenario.random_link_phases ? p : 0.0;
  };

  const ArrayGeometry bs_geom{scenario.bs_antenna_count, scenario.bs_spacing};
  const ArrayGeometry single{1, 0.5};
  const double ref = scenario.pathloss_ref_linear();

  ChannelSet ch;
  const int K = scenario.surface_count();

  ch.bs_to_ris.reserve(K);
  for (int k = 0; k < K; ++k) {
    const ArrayGeometry ris_geom{scenario.star_ris[k].element_count, scenario.star_ris[k].spacing};
    ch.bs_to_ris.push_back(
        los_channel(scenario.bs_position, bs_geom, scenario.star_ris[k].position, ris_geom, ref, link_phase()));
  }

  ch.bs_to_refl_user.reserve(scenario.reflection_users.size());
  for (const auto& u : scenario.reflection_users) {
    MatrixXcd h = los_channel(scenario.bs_position, bs_geom, u.position, single, ref, link_phase());
    // N_0 x 1 column convention: store the receive channel as a vector h with
    // h^H being the 1 x N_0 row seen by the user.
    ch.bs_to_refl_user.push_back(h.row(0).adjoint());
  }

  ch.ris_to_trans_user.resize(K);
  for (const auto& grp : scenario.transmission_groups) {
    const int k = grp.ris_index;
    const ArrayGeometry ris_geom{scenario.star_ris[k].element_count, scenario.star_ris[k].spacing};
    for (const auto& pos : grp.user_positions) {
      MatrixXcd h = los_channel(scenario.star_ris[k].position, ris_geom, pos, single, ref, link_phase());
      ch.ris_to_trans_user[k].push_back(h.row(0).adjoint());
    }
  }

  ch.ris_to_refl_user.resize(K);
  for (int k = 0; k < K; ++k) {
    const ArrayGeometry ris_geom{scenario.star_ris[k].element_count, scenario.star_ris[k].spacing};
    for (const auto& u : scenario.reflection_users) {
      MatrixXcd h = los_channel(scenario.star_ris[k].position, ris_geom, u.position, single, ref, link_phase());
      ch.ris_to_refl_user[k].push_back(h.row(0).adjoint());
    }
  }

  return ch;
}

}  // namespace starris
