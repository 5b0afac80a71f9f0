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

#include "chanmod/cipher.hpp"

#include <charconv>
#include <stdexcept>
#include <string>

namespace chanmod {

namespace {

int require_bit(int v, const char* who) {
    if (v != 0 && v != 1) {
        throw std::invalid_argument(std::string(who) + ": value must be 0 or 1");
    }
    return v;
}

}  // namespace

PositionBit tx_position_for(int message_bit, int key_bit) {
    require_bit(message_bit, "tx_position_for(message)");
    require_bit(key_bit, "tx_position_for(key)");
    return static_cast<PositionBit>(message_bit ^ key_bit);
}

PositionBit rx_position_for(int key_bit) {
    require_bit(key_bit, "rx_position_for");
    return static_cast<PositionBit>(key_bit);
}

int recover_from_positions(PositionBit p_tx, PositionBit p_rx) noexcept {
    return channel_bit(p_tx, p_rx);
}

std::uint64_t parse_seed(std::string_view text) {
    int base = 10;
    std::string_view digits = text;
    if (text.size() > 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
        base = 16;
        digits = text.substr(2);
    }
    std::uint64_t value = 0;
    const char* first = digits.data();
    const char* last = digits.data() + digits.size();
    const auto [ptr, ec] = std::from_chars(first, last, value, base);
    if (ec != std::errc{} || ptr != last || digits.empty()) {
        throw std::invalid_argument("parse_seed: '" + std::string(text) +
                                    "' is not a decimal or 0x-prefixed 64-bit seed");
    }
    return value;
}

}  // namespace chanmod
