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

#ifndef CHANMOD_GEOMETRY_HPP
#define CHANMOD_GEOMETRY_HPP

#include <cstdint>

namespace chanmod {

inline constexpr double kSpeedOfLight_m_s = 299792458.0;

/// Carrier wavelength. lambda_m is always c / carrier_frequency_hz.
struct Wavelength {
    double carrier_frequency_hz;
    double lambda_m;

    /// Throws std::invalid_argument unless the frequency is finite and positive.
    static Wavelength from_frequency(double carrier_frequency_hz);
};

/// Antenna position selector. Each antenna is either at its home position or
/// displaced by LinkGeometry::displacement_m away from the other antenna
/// along the baseline axis.
enum class PositionBit : int {
    home = 0,
    displaced = 1,
};

constexpr int to_bit(PositionBit p) noexcept { return static_cast<int>(p); }

/// Throws std::invalid_argument unless v is 0 or 1.
PositionBit to_position_bit(int v);

/// Two collinear antennas, each movable between two positions on the
/// baseline axis. With both position bits at 0 the antennas are baseline_m
/// apart; a set bit moves that antenna displacement_m further away.
struct LinkGeometry {
    Wavelength wavelength;
    double baseline_m;
    double displacement_m;

    /// Validated construction; throws std::invalid_argument on non-positive
    /// or non-finite parameters.
    static LinkGeometry make(double carrier_frequency_hz, double baseline_m,
                             double displacement_m);

    /// Displacement fixed to lambda/2, so that the two joint-position
    /// classes sit exactly pi apart in propagation phase.
    static LinkGeometry make_half_wave(double carrier_frequency_hz,
                                       double baseline_m = 1.0);
};

/// Distance between the two antennas for a joint position choice:
/// baseline_m + displacement_m * (p_tx + p_rx). Symmetric in its arguments.
double path_length_m(const LinkGeometry& geom, PositionBit p_tx, PositionBit p_rx);

/// Reduce an angle to [0, 2*pi). Throws std::invalid_argument on
/// non-finite input.
double wrap_phase(double phi_rad);

/// One-way propagation phase -2*pi*L/lambda, wrapped to [0, 2*pi).
/// The sign convention (delay grows with distance) is internal; only phase
/// differences are observable.
double propagation_phase(const LinkGeometry& geom, PositionBit p_tx, PositionBit p_rx);

/// Joint-position channel class: 0 when both antennas chose the same
/// position bit, 1 when they alternate. Equals p_tx XOR p_rx.
int channel_bit(PositionBit p_tx, PositionBit p_rx) noexcept;

/// Shorter arc between two angles, in [0, pi].
double circular_distance(double a_rad, double b_rad);

}  // namespace chanmod

#endif  // CHANMOD_GEOMETRY_HPP
