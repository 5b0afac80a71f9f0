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

#include "chanmod/codec.hpp"

#include <stdexcept>

namespace chanmod {

Bitstream encode_ascii(std::string_view text) {
    Bitstream bits;
    bits.reserve(text.size() * 8);
    for (std::size_t i = 0; i < text.size(); ++i) {
        const unsigned char c = static_cast<unsigned char>(text[i]);
        if (c > 127) {
            throw std::invalid_argument("encode_ascii: non-ASCII character at index " +
                                        std::to_string(i));
        }
        for (int b = 7; b >= 0; --b) {
            bits.push_back(static_cast<std::uint8_t>((c >> b) & 1u));
        }
    }
    return bits;
}

std::string decode_ascii(const Bitstream& bits) {
    if (bits.size() % 8 != 0) {
        throw std::invalid_argument("decode_ascii: bit count " + std::to_string(bits.size()) +
                                    " is not a multiple of 8");
    }
    std::string text;
    text.reserve(bits.size() / 8);
    for (std::size_t byte = 0; byte < bits.size() / 8; ++byte) {
        unsigned value = 0;
        for (std::size_t b = 0; b < 8; ++b) {
            const std::uint8_t bit = bits[byte * 8 + b];
            if (bit > 1) {
                throw std::invalid_argument("decode_ascii: element at index " +
                                            std::to_string(byte * 8 + b) + " is not a bit");
            }
            value = (value << 1) | bit;
        }
        if (value > 127) {
            throw std::invalid_argument("decode_ascii: byte " + std::to_string(byte) +
                                        " decodes to " + std::to_string(value) +
                                        ", outside 7-bit ASCII");
        }
        text.push_back(static_cast<char>(value));
    }
    return text;
}

namespace {

int require_bit(int v, const char* who) {
    if (v != 0 && v != 1) {
        throw std::invalid_argument(std::string(who) + ": value must be 0 or 1");
    }
    return v;
}

}  // namespace

int bit_to_channel(int message_bit) { return require_bit(message_bit, "bit_to_channel"); }

int channel_to_bit(int channel_class) { return require_bit(channel_class, "channel_to_bit"); }

}  // namespace chanmod
