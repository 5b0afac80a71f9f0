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

#include <benchmark/benchmark.h>

#include "chanmod/channel.hpp"
#include "chanmod/cipher.hpp"
#include "chanmod/link.hpp"

namespace {

using namespace chanmod;

LinkGeometry default_geometry() { return LinkGeometry::make_half_wave(2.45e9, 1.0); }

void BM_KeyStreamBit(benchmark::State& state) {
    KeyStream ks(1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(ks.next_bit());
    }
}
BENCHMARK(BM_KeyStreamBit);

void BM_Sound(benchmark::State& state) {
    ChannelModel channel(default_geometry(), ChannelParams{0.1, 0.02e-3, 1});
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            channel.sound(PositionBit::home, PositionBit::displaced, SoundingDirection::forward));
    }
}
BENCHMARK(BM_Sound);

void BM_Decide(benchmark::State& state) {
    const CalibrationTable table = ideal_calibration(default_geometry());
    double phase = 0.0;
    for (auto _ : state) {
        phase += 1e-3;
        benchmark::DoNotOptimize(decide(phase, table));
    }
}
BENCHMARK(BM_Decide);

void BM_TransmitCallsign(benchmark::State& state) {
    const SessionConfig config{
        ChannelModel(default_geometry(), ChannelParams{0.0, 0.02e-3, 1}), 1,
        PilotMode::forward_pilot, true};
    for (auto _ : state) {
        benchmark::DoNotOptimize(transmit(config, "OE1GAQ"));
    }
}
BENCHMARK(BM_TransmitCallsign);

void BM_BerSweepPoint(benchmark::State& state) {
    const SessionConfig config{
        ChannelModel(default_geometry(), ChannelParams{0.0, 0.02e-3, 1}), 1,
        PilotMode::forward_pilot, true};
    for (auto _ : state) {
        benchmark::DoNotOptimize(ber_sweep_point(config, 0.5, 1000, 0));
    }
}
BENCHMARK(BM_BerSweepPoint);

}  // namespace

BENCHMARK_MAIN();
