// SPDX-License-Identifier: Apache-2.0
//
// chanmod - link simulator for channel modulation with position-keyed encryption
// Copyright (C) 2026 chanmod contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "chanmod/channel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace chanmod {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kCoincidenceLimit_m = 1e-6;

double distance(double ax, double ay, double bx, double by) {
    return std::hypot(ax - bx, ay - by);
}

}  // namespace

ChannelModel::ChannelModel(const LinkGeometry& geometry, const ChannelParams& params)
    : geometry_(LinkGeometry::make(geometry.wavelength.carrier_frequency_hz,
                                   geometry.baseline_m, geometry.displacement_m)),
      params_(params),
      rng_(params.noise_seed) {
    if (!std::isfinite(params.phase_noise_sigma_rad) || params.phase_noise_sigma_rad < 0.0) {
        throw std::invalid_argument("phase_noise_sigma_rad must be finite and >= 0");
    }
    if (!std::isfinite(params.position_jitter_m) || params.position_jitter_m < 0.0) {
        throw std::invalid_argument("position_jitter_m must be finite and >= 0");
    }
}

double ChannelModel::jittered_offset(PositionBit p) {
    return geometry_.displacement_m * to_bit(p) +
           rng_.uniform_symmetric() * params_.position_jitter_m;
}

Measurement ChannelModel::sound(PositionBit p_tx, PositionBit p_rx, SoundingDirection) {
    // Reciprocal direct path: the pilot direction never enters the
    // computation, and the draw order below does not depend on it.
    const double jitter_tx = rng_.uniform_symmetric() * params_.position_jitter_m;
    const double jitter_rx = rng_.uniform_symmetric() * params_.position_jitter_m;
    const double noise = rng_.gaussian() * params_.phase_noise_sigma_rad;

    const double length = path_length_m(geometry_, p_tx, p_rx) + jitter_tx + jitter_rx;
    if (length <= 0.0) {
        throw std::domain_error("sound: jittered path length is not positive");
    }

    const double phase = wrap_phase(-kTwoPi * length / geometry_.wavelength.lambda_m + noise);
    return Measurement{phase, geometry_.baseline_m / length};
}

Measurement ChannelModel::observe(const ObserverPoint& obs, Emitter emitter, PositionBit p_tx,
                                  PositionBit p_rx) {
    const double tx_x = -geometry_.displacement_m * to_bit(p_tx);
    const double rx_x = geometry_.baseline_m + geometry_.displacement_m * to_bit(p_rx);
    if (distance(obs.x_m, obs.y_m, tx_x, 0.0) <= kCoincidenceLimit_m ||
        distance(obs.x_m, obs.y_m, rx_x, 0.0) <= kCoincidenceLimit_m) {
        throw std::invalid_argument("observe: observer coincides with an antenna position");
    }

    // Emitter jitter acts along the same displacement axis as in sound().
    const double offset = jittered_offset(emitter == Emitter::tx_antenna ? p_tx : p_rx);
    const double emitter_x =
        emitter == Emitter::tx_antenna ? -offset : geometry_.baseline_m + offset;
    const double noise = rng_.gaussian() * params_.phase_noise_sigma_rad;

    const double length = distance(obs.x_m, obs.y_m, emitter_x, 0.0);
    if (length <= 0.0) {
        throw std::domain_error("observe: observer coincides with the jittered emitter");
    }

    const double phase = wrap_phase(-kTwoPi * length / geometry_.wavelength.lambda_m + noise);
    return Measurement{phase, geometry_.baseline_m / length};
}

}  // namespace chanmod
