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

#include "chanmod/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace chanmod {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_positive_finite(double v, const char* name) {
    if (!std::isfinite(v) || v <= 0.0) {
        throw std::invalid_argument(std::string(name) + " must be finite and > 0, got " +
                                    std::to_string(v));
    }
}

}  // namespace

Wavelength Wavelength::from_frequency(double carrier_frequency_hz) {
    require_positive_finite(carrier_frequency_hz, "carrier_frequency_hz");
    return Wavelength{carrier_frequency_hz, kSpeedOfLight_m_s / carrier_frequency_hz};
}

PositionBit to_position_bit(int v) {
    if (v != 0 && v != 1) {
        throw std::invalid_argument("position bit must be 0 or 1, got " + std::to_string(v));
    }
    return static_cast<PositionBit>(v);
}

LinkGeometry LinkGeometry::make(double carrier_frequency_hz, double baseline_m,
                                double displacement_m) {
    Wavelength wl = Wavelength::from_frequency(carrier_frequency_hz);
    require_positive_finite(baseline_m, "baseline_m");
    require_positive_finite(displacement_m, "displacement_m");
    return LinkGeometry{wl, baseline_m, displacement_m};
}

LinkGeometry LinkGeometry::make_half_wave(double carrier_frequency_hz, double baseline_m) {
    Wavelength wl = Wavelength::from_frequency(carrier_frequency_hz);
    require_positive_finite(baseline_m, "baseline_m");
    return LinkGeometry{wl, baseline_m, wl.lambda_m / 2.0};
}

double path_length_m(const LinkGeometry& geom, PositionBit p_tx, PositionBit p_rx) {
    return geom.baseline_m + geom.displacement_m * (to_bit(p_tx) + to_bit(p_rx));
}

double wrap_phase(double phi_rad) {
    if (!std::isfinite(phi_rad)) {
        throw std::invalid_argument("wrap_phase: phase must be finite");
    }
    double wrapped = phi_rad - kTwoPi * std::floor(phi_rad / kTwoPi);
    // floor-based reduction can land on 2*pi when phi is a tiny negative number
    if (wrapped >= kTwoPi) {
        wrapped -= kTwoPi;
    }
    return wrapped;
}

double propagation_phase(const LinkGeometry& geom, PositionBit p_tx, PositionBit p_rx) {
    const double length = path_length_m(geom, p_tx, p_rx);
    return wrap_phase(-kTwoPi * length / geom.wavelength.lambda_m);
}

int channel_bit(PositionBit p_tx, PositionBit p_rx) noexcept {
    return to_bit(p_tx) ^ to_bit(p_rx);
}

double circular_distance(double a_rad, double b_rad) {
    const double diff = wrap_phase(a_rad - b_rad);
    return std::min(diff, kTwoPi - diff);
}

}  // namespace chanmod
