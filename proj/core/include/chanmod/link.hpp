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

#ifndef CHANMOD_LINK_HPP
#define CHANMOD_LINK_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "chanmod/channel.hpp"
#include "chanmod/cipher.hpp"
#include "chanmod/geometry.hpp"

namespace chanmod {

/// Reference phases of the two channel classes, measured once up front.
/// Hard decisions later pick the class whose reference is circularly closer,
/// which puts the decision boundary at the two circular midpoints.
struct CalibrationTable {
    double phi_same_rad;             // same-position class reference, [0, 2*pi)
    double phi_alt_rad;              // alternating class reference, [0, 2*pi)
    double class_separation_rad;     // circular distance between the two
    double consistency_tolerance_rad;

    bool operator==(const CalibrationTable&) const = default;
};

class CalibrationError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

inline constexpr double kDefaultConsistencyTolerance_rad = 0.1;

/// Measure all four joint positions once (forward pilot, in the order
/// (0,0) (0,1) (1,0) (1,1)) and build the reference table. Each class
/// reference is the circular mean of its two members. Throws
/// CalibrationError when a class's intra-class spread exceeds the tolerance
/// (this is the check that the wrapped phase makes the two same-position
/// geometries indistinguishable) or when the class separation is not larger
/// than twice the tolerance.
CalibrationTable calibrate(ChannelModel& channel,
                           double consistency_tolerance_rad = kDefaultConsistencyTolerance_rad);

/// Reference table from the noiseless closed-form phases, no soundings.
/// Used where the detector itself is under test at noise levels that an
/// initial measurement pass would not survive.
CalibrationTable ideal_calibration(const LinkGeometry& geometry,
                                   double consistency_tolerance_rad = kDefaultConsistencyTolerance_rad);

/// Hard decision: 0 when the phase is circularly at least as close to the
/// same-position reference as to the alternating one, else 1. Exact ties
/// resolve to 0.
int decide(double phase_rad, const CalibrationTable& table);

/// Who emits the sounding pilot during data transmission. Calibration is
/// always a forward pass.
enum class PilotMode {
    forward_pilot,
    reversed_pilot,
};

struct SessionConfig {
    ChannelModel channel;
    std::uint64_t key_seed = 1;
    PilotMode mode = PilotMode::forward_pilot;
    /// Reversed pilot only: whether the measured channel reaches the
    /// receiver's decoder over an auxiliary feedback path.
    bool feedback_available = true;
};

struct TraceRecord {
    std::size_t index;
    int message_bit;
    int key_bit;
    PositionBit tx_pos;
    PositionBit rx_pos;
    int true_channel_bit;       // tx_pos XOR rx_pos
    double true_phase_rad;      // noiseless phase of the selected channel
    double measured_phase_rad;
    int decided_channel_bit;
    int decoded_bit;

    bool operator==(const TraceRecord&) const = default;
};

/// Run parameters echoed into every trace so a trace file reproduces itself.
struct SessionSummary {
    double carrier_frequency_hz;
    double baseline_m;
    double displacement_m;
    double phase_noise_sigma_rad;
    double position_jitter_m;
    std::uint64_t noise_seed;
    std::uint64_t key_seed;
    PilotMode mode;
    bool feedback_available;

    bool operator==(const SessionSummary&) const = default;
};

/// decoded_text value when the reversed pilot ran without a feedback path:
/// the decisions exist at the transmitter's side but never reach the
/// receiver.
inline constexpr std::string_view kNoFeedbackMarker = "NO_FEEDBACK";

/// decoded_text value when the decided bits do not form 7-bit ASCII bytes
/// (possible under heavy phase noise).
inline constexpr std::string_view kInvalidAsciiMarker = "INVALID_ASCII";

struct SessionTrace {
    SessionSummary summary;
    CalibrationTable calibration;
    std::vector<TraceRecord> records;
    std::string decoded_text;  // message text, or one of the markers above
    std::size_t bit_errors;    // records whose decoded bit != message bit

    bool operator==(const SessionTrace&) const = default;
};

/// Full session: calibrate, then per message bit choose positions
/// (rx = key bit, tx = message XOR key), sound once in the configured
/// direction, hard-decide, and reassemble the text. The config's channel is
/// copied, so repeated calls with the same config reproduce the same trace.
/// Throws on non-ASCII text; CalibrationError propagates.
SessionTrace transmit(const SessionConfig& config, std::string_view text);

enum class EavesdropStatus {
    decoded,
    indeterminate,
};

struct EavesdropResult {
    EavesdropStatus status;
    std::string text;        // set when status == decoded
    std::string diagnostic;  // set when status == indeterminate
};

/// What an outside party recovers from a trace. Both position sequences
/// visible: the message, exactly (positions XOR to the message bit). Anything
/// less: indeterminate, because for a fixed message bit the key maps
/// one-to-one onto the transmit position, so every message is equally
/// consistent with some key.
EavesdropResult eavesdrop(std::span<const TraceRecord> records, bool knows_tx_positions,
                          bool knows_rx_positions);
EavesdropResult eavesdrop(const SessionTrace& trace, bool knows_tx_positions,
                          bool knows_rx_positions);

struct BerPoint {
    double sigma_rad;
    double ber;

    bool operator==(const BerPoint&) const = default;
};

/// Bit error rate of the hard-decision detector versus phase noise. Each
/// sigma runs bits_per_point pseudorandom message bits over an independent
/// channel (noise seed = base noise seed + point index; message and key
/// streams are derived from the base key seed and the index) against the
/// ideal reference table. Points are independent, so results do not depend
/// on evaluation order. Throws std::invalid_argument on sigma < 0 or
/// bits_per_point < 1000.
std::vector<BerPoint> ber_sweep(const SessionConfig& base_config, std::span<const double> sigmas,
                                std::size_t bits_per_point);

/// Single sweep point; ber_sweep(i) is exactly ber_sweep_point(..., i).
BerPoint ber_sweep_point(const SessionConfig& base_config, double sigma_rad,
                         std::size_t bits_per_point, std::size_t point_index);

}  // namespace chanmod

#endif  // CHANMOD_LINK_HPP
