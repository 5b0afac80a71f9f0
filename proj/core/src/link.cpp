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

#include "chanmod/link.hpp"

#include <cmath>
#include <sstream>

#include "chanmod/codec.hpp"

namespace chanmod {

namespace {

// Offset between the message stream seed and the key stream seed of a sweep
// point, so the two streams never collide.
constexpr std::uint64_t kSweepMessageSeedOffset = 0x9e3779b97f4a7c15ULL;

double circular_mean2(double a_rad, double b_rad) {
    if (a_rad == b_rad) {
        return a_rad;
    }
    const double y = std::sin(a_rad) + std::sin(b_rad);
    const double x = std::cos(a_rad) + std::cos(b_rad);
    return wrap_phase(std::atan2(y, x));
}

CalibrationTable make_table(double phi_same, double phi_alt, double spread_same,
                            double spread_alt, double tolerance) {
    if (spread_same > tolerance) {
        std::ostringstream msg;
        msg << "calibration failed: same-position class spread " << spread_same
            << " rad exceeds tolerance " << tolerance;
        throw CalibrationError(msg.str());
    }
    if (spread_alt > tolerance) {
        std::ostringstream msg;
        msg << "calibration failed: alternating class spread " << spread_alt
            << " rad exceeds tolerance " << tolerance;
        throw CalibrationError(msg.str());
    }
    const double separation = circular_distance(phi_same, phi_alt);
    if (separation <= 2.0 * tolerance) {
        std::ostringstream msg;
        msg << "calibration failed: class separation " << separation
            << " rad is not above twice the tolerance " << tolerance;
        throw CalibrationError(msg.str());
    }
    return CalibrationTable{phi_same, phi_alt, separation, tolerance};
}

SoundingDirection pilot_direction(PilotMode mode) {
    return mode == PilotMode::forward_pilot ? SoundingDirection::forward
                                            : SoundingDirection::reverse;
}

SessionSummary summarize(const SessionConfig& config) {
    const LinkGeometry& geom = config.channel.geometry();
    const ChannelParams& params = config.channel.params();
    return SessionSummary{geom.wavelength.carrier_frequency_hz,
                          geom.baseline_m,
                          geom.displacement_m,
                          params.phase_noise_sigma_rad,
                          params.position_jitter_m,
                          params.noise_seed,
                          config.key_seed,
                          config.mode,
                          config.feedback_available};
}

const char* kIndeterminateDiagnostic =
    "indeterminate: for any fixed message bit the key bit maps one-to-one onto "
    "the transmit position, so every message is equally consistent with some key; "
    "both position sequences are required";

}  // namespace

CalibrationTable calibrate(ChannelModel& channel, double consistency_tolerance_rad) {
    const PositionBit zero = PositionBit::home;
    const PositionBit one = PositionBit::displaced;

    const double phi00 = channel.sound(zero, zero, SoundingDirection::forward).phase_rad;
    const double phi01 = channel.sound(zero, one, SoundingDirection::forward).phase_rad;
    const double phi10 = channel.sound(one, zero, SoundingDirection::forward).phase_rad;
    const double phi11 = channel.sound(one, one, SoundingDirection::forward).phase_rad;

    return make_table(circular_mean2(phi00, phi11), circular_mean2(phi01, phi10),
                      circular_distance(phi00, phi11), circular_distance(phi01, phi10),
                      consistency_tolerance_rad);
}

CalibrationTable ideal_calibration(const LinkGeometry& geometry,
                                   double consistency_tolerance_rad) {
    const double phi_same = propagation_phase(geometry, PositionBit::home, PositionBit::home);
    const double phi_alt = propagation_phase(geometry, PositionBit::home, PositionBit::displaced);
    return make_table(phi_same, phi_alt, 0.0, 0.0, consistency_tolerance_rad);
}

int decide(double phase_rad, const CalibrationTable& table) {
    const double d_same = circular_distance(phase_rad, table.phi_same_rad);
    const double d_alt = circular_distance(phase_rad, table.phi_alt_rad);
    return d_same <= d_alt ? 0 : 1;
}

SessionTrace transmit(const SessionConfig& config, std::string_view text) {
    const Bitstream message_bits = encode_ascii(text);

    SessionTrace trace;
    trace.summary = summarize(config);

    ChannelModel channel = config.channel;  // session-private stream
    trace.calibration = calibrate(channel);

    KeyStream key(config.key_seed);
    const SoundingDirection dir = pilot_direction(config.mode);
    const LinkGeometry& geom = channel.geometry();

    Bitstream decoded_bits;
    decoded_bits.reserve(message_bits.size());
    trace.records.reserve(message_bits.size());
    trace.bit_errors = 0;

    for (std::size_t i = 0; i < message_bits.size(); ++i) {
        const int m = message_bits[i];
        const int k = key.next_bit();
        const PositionBit tx = tx_position_for(m, k);
        const PositionBit rx = rx_position_for(k);

        const Measurement meas = channel.sound(tx, rx, dir);
        const int decided = decide(meas.phase_rad, trace.calibration);
        const int decoded = channel_to_bit(decided);

        trace.records.push_back(TraceRecord{i, m, k, tx, rx, channel_bit(tx, rx),
                                            propagation_phase(geom, tx, rx), meas.phase_rad,
                                            decided, decoded});
        decoded_bits.push_back(static_cast<std::uint8_t>(decoded));
        if (decoded != m) {
            ++trace.bit_errors;
        }
    }

    if (config.mode == PilotMode::reversed_pilot && !config.feedback_available) {
        // The transmitter's side saw the pilot and knows every decision, but
        // nothing carries them back to the receiver.
        trace.decoded_text = kNoFeedbackMarker;
    } else {
        try {
            trace.decoded_text = decode_ascii(decoded_bits);
        } catch (const std::invalid_argument&) {
            trace.decoded_text = kInvalidAsciiMarker;
        }
    }
    return trace;
}

EavesdropResult eavesdrop(std::span<const TraceRecord> records, bool knows_tx_positions,
                          bool knows_rx_positions) {
    if (!(knows_tx_positions && knows_rx_positions)) {
        return EavesdropResult{EavesdropStatus::indeterminate, "", kIndeterminateDiagnostic};
    }
    Bitstream bits;
    bits.reserve(records.size());
    for (const TraceRecord& rec : records) {
        bits.push_back(static_cast<std::uint8_t>(recover_from_positions(rec.tx_pos, rec.rx_pos)));
    }
    return EavesdropResult{EavesdropStatus::decoded, decode_ascii(bits), ""};
}

EavesdropResult eavesdrop(const SessionTrace& trace, bool knows_tx_positions,
                          bool knows_rx_positions) {
    return eavesdrop(std::span<const TraceRecord>(trace.records), knows_tx_positions,
                     knows_rx_positions);
}

BerPoint ber_sweep_point(const SessionConfig& base_config, double sigma_rad,
                         std::size_t bits_per_point, std::size_t point_index) {
    if (!(sigma_rad >= 0.0) || !std::isfinite(sigma_rad)) {
        throw std::invalid_argument("ber_sweep: sigma must be finite and >= 0");
    }
    if (bits_per_point < 1000) {
        throw std::invalid_argument("ber_sweep: need at least 1000 bits per point");
    }

    ChannelParams params = base_config.channel.params();
    params.phase_noise_sigma_rad = sigma_rad;
    params.noise_seed += point_index;
    ChannelModel channel(base_config.channel.geometry(), params);

    // Detector references come from the closed-form phases; a measured
    // calibration pass would itself drown at the large-sigma end of a sweep.
    const CalibrationTable table = ideal_calibration(channel.geometry());
    const SoundingDirection dir = pilot_direction(base_config.mode);

    KeyStream message_stream(base_config.key_seed + point_index + kSweepMessageSeedOffset);
    KeyStream key_stream(base_config.key_seed + point_index);

    std::size_t errors = 0;
    for (std::size_t i = 0; i < bits_per_point; ++i) {
        const int m = message_stream.next_bit();
        const int k = key_stream.next_bit();
        const Measurement meas = channel.sound(tx_position_for(m, k), rx_position_for(k), dir);
        if (channel_to_bit(decide(meas.phase_rad, table)) != m) {
            ++errors;
        }
    }
    return BerPoint{sigma_rad, static_cast<double>(errors) / static_cast<double>(bits_per_point)};
}

std::vector<BerPoint> ber_sweep(const SessionConfig& base_config, std::span<const double> sigmas,
                                std::size_t bits_per_point) {
    std::vector<BerPoint> points;
    points.reserve(sigmas.size());
    for (std::size_t i = 0; i < sigmas.size(); ++i) {
        points.push_back(ber_sweep_point(base_config, sigmas[i], bits_per_point, i));
    }
    return points;
}

}  // namespace chanmod
