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

#ifndef CHANMOD_CODEC_HPP
#define CHANMOD_CODEC_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace chanmod {

/// Ordered bit sequence; every element is 0 or 1.
using Bitstream = std::vector<std::uint8_t>;

/// 8 bits per character, most-significant bit first, in text order.
/// Throws std::invalid_argument naming the offending index when a character
/// is outside 7-bit ASCII.
Bitstream encode_ascii(std::string_view text);

/// Inverse of encode_ascii. Throws std::invalid_argument when the length is
/// not a multiple of 8, an element is not a bit, or a decoded byte exceeds
/// 127 (the error names the byte index).
std::string decode_ascii(const Bitstream& bits);

/// Message bit to channel class. The map is the identity (0 -> same-position
/// class, 1 -> alternating class); it exists as a function so the polarity
/// is a single swappable point.
int bit_to_channel(int message_bit);

/// Inverse of bit_to_channel.
int channel_to_bit(int channel_class);

}  // namespace chanmod

#endif  // CHANMOD_CODEC_HPP
