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

#ifndef CHANMOD_CIPHER_HPP
#define CHANMOD_CIPHER_HPP

#include <cstdint>
#include <string_view>

#include "chanmod/geometry.hpp"

namespace chanmod {

/// Keystream recurrence constants (Knuth's 64-bit linear congruential
/// multiplier/increment). Fixed so that traces reproduce bit-for-bit across
/// implementations. The stream is a stand-in for a pre-shared pad, not a
/// cryptographic generator.
inline constexpr std::uint64_t kKeyStreamMultiplier = 6364136223846793005ULL;
inline constexpr std::uint64_t kKeyStreamIncrement = 1442695040888963407ULL;

/// Deterministic key bit generator: the receiver's planned position
/// schedule. state' = state * mult + inc (mod 2^64), emitted bit is the
/// most significant bit of the new state.
class KeyStream {
  public:
    explicit KeyStream(std::uint64_t seed) noexcept : seed_(seed), state_(seed) {}

    int next_bit() noexcept {
        state_ = state_ * kKeyStreamMultiplier + kKeyStreamIncrement;
        ++emitted_;
        return static_cast<int>(state_ >> 63);
    }

    std::uint64_t seed() const noexcept { return seed_; }
    std::uint64_t state() const noexcept { return state_; }
    std::uint64_t emitted() const noexcept { return emitted_; }

  private:
    std::uint64_t seed_;
    std::uint64_t state_;
    std::uint64_t emitted_ = 0;
};

/// Transmit antenna position: message XOR key. For a fixed message bit the
/// map key -> position is a bijection, so a uniform key makes the visible
/// transmit position independent of the message.
PositionBit tx_position_for(int message_bit, int key_bit);

/// Receive antenna position: the key bit itself.
PositionBit rx_position_for(int key_bit);

/// What a party that sees both antenna positions recovers: p_tx XOR p_rx,
/// which is the message bit.
int recover_from_positions(PositionBit p_tx, PositionBit p_rx) noexcept;

/// Parse a seed given as decimal or 0x-prefixed hex. Throws
/// std::invalid_argument on malformed or out-of-range input.
std::uint64_t parse_seed(std::string_view text);

}  // namespace chanmod

#endif  // CHANMOD_CIPHER_HPP
