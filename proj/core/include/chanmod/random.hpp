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

#ifndef CHANMOD_RANDOM_HPP
#define CHANMOD_RANDOM_HPP

#include <cstdint>
#include <random>

namespace chanmod {

/// Seeded draw stream on top of mt19937_64. The variate derivations are
/// written out here instead of using <random> distributions so that a given
/// seed produces the same draw sequence on every standard library.
class RandomStream {
  public:
    explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, 1), 53-bit resolution.
    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Uniform in [-1, 1).
    double uniform_symmetric() { return 2.0 * uniform01() - 1.0; }

    /// Standard normal via Box-Muller. Always consumes exactly two engine
    /// draws; nothing is cached between calls.
    double gaussian();

    bool operator==(const RandomStream& other) const { return engine_ == other.engine_; }

  private:
    std::mt19937_64 engine_;
};

}  // namespace chanmod

#endif  // CHANMOD_RANDOM_HPP
