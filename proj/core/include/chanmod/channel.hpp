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

#ifndef CHANMOD_CHANNEL_HPP
#define CHANMOD_CHANNEL_HPP

#include <cstdint>

#include "chanmod/geometry.hpp"
#include "chanmod/random.hpp"

namespace chanmod {

/// Which station emits the sounding pilot. Forward is the usual
/// transmitter-to-receiver direction; Reverse swaps the roles. The direct
/// path is reciprocal, so the direction never changes the measured values.
enum class SoundingDirection {
    forward,
    reverse,
};

/// One channel sounding. Detection uses only the phase; the amplitude is
/// carried along but never consulted.
struct Measurement {
    double phase_rad;  // in [0, 2*pi)
    double amplitude;  // linear, > 0
};

/// Third-party measurement location, in the plane of the baseline axis.
/// Tx home position is the origin, rx home is (baseline_m, 0); tx displaces
/// along -x, rx along +x.
struct ObserverPoint {
    double x_m;
    double y_m;
};

enum class Emitter {
    tx_antenna,
    rx_antenna,
};

struct ChannelParams {
    double phase_noise_sigma_rad = 0.0;
    double position_jitter_m = 0.02e-3;  // linear-stage repeatability
    std::uint64_t noise_seed = 1;
};

/// Stochastic two-position channel. A model instance owns one seeded draw
/// stream; identical seeds and identical call sequences give bit-identical
/// measurement sequences. Draws are consumed in a fixed per-call order
/// (sound: tx jitter, rx jitter, phase noise; observe: emitter jitter,
/// phase noise) regardless of the sounding direction and of whether sigma
/// or jitter is zero, so runs that differ only in direction stay
/// seed-comparable.
///
/// Instances are single-threaded; run parallel experiments on independent
/// instances with deterministically derived seeds.
class ChannelModel {
  public:
    /// Throws std::invalid_argument on negative sigma or jitter, or an
    /// invalid geometry.
    ChannelModel(const LinkGeometry& geometry, const ChannelParams& params);

    /// Sound the channel selected by the joint position choice. The phase is
    /// the jittered propagation phase plus Gaussian phase noise, wrapped to
    /// [0, 2*pi); the amplitude falls off as baseline_m / path_length.
    Measurement sound(PositionBit p_tx, PositionBit p_rx, SoundingDirection dir);

    /// What a third party at obs measures while one antenna emits. Only the
    /// emitting antenna's (jittered) position enters the path; the passive
    /// antenna does not scatter. Throws std::invalid_argument when obs
    /// coincides with an antenna position.
    Measurement observe(const ObserverPoint& obs, Emitter emitter, PositionBit p_tx,
                        PositionBit p_rx);

    const LinkGeometry& geometry() const noexcept { return geometry_; }
    const ChannelParams& params() const noexcept { return params_; }

  private:
    double jittered_offset(PositionBit p);

    LinkGeometry geometry_;
    ChannelParams params_;
    RandomStream rng_;
};

}  // namespace chanmod

#endif  // CHANMOD_CHANNEL_HPP
