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

#include <array>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "chanmod/channel.hpp"
#include "chanmod/cipher.hpp"
#include "chanmod/geometry.hpp"
#include "chanmod/link.hpp"
#include "chanmod/trace_io.hpp"

namespace {

struct CommonOptions {
    double freq_hz = 2.45e9;
    double baseline_m = 1.0;
    std::optional<double> displacement_m;  // half a wavelength when unset
    double noise_sigma_rad = 0.0;
    double pos_jitter_m = 0.02e-3;
    std::string key_seed = "1";
    std::string noise_seed = "1";
};

void add_common_options(CLI::App& cmd, CommonOptions& opts) {
    cmd.add_option("--freq-hz", opts.freq_hz, "Carrier frequency in Hz")
        ->capture_default_str();
    cmd.add_option("--baseline-m", opts.baseline_m, "Antenna separation at home positions, m")
        ->capture_default_str();
    cmd.add_option("--displacement-m", opts.displacement_m,
                   "Per-bit antenna displacement, m (default: half a wavelength)");
    cmd.add_option("--noise-sigma", opts.noise_sigma_rad, "Phase noise sigma, rad")
        ->capture_default_str();
    cmd.add_option("--pos-jitter-m", opts.pos_jitter_m, "Antenna positioning jitter bound, m")
        ->capture_default_str();
    cmd.add_option("--key-seed", opts.key_seed, "Key stream seed (decimal or 0x hex)")
        ->capture_default_str();
    cmd.add_option("--noise-seed", opts.noise_seed, "Channel noise seed (decimal or 0x hex)")
        ->capture_default_str();
}

chanmod::LinkGeometry build_geometry(const CommonOptions& opts) {
    if (opts.displacement_m.has_value()) {
        return chanmod::LinkGeometry::make(opts.freq_hz, opts.baseline_m, *opts.displacement_m);
    }
    return chanmod::LinkGeometry::make_half_wave(opts.freq_hz, opts.baseline_m);
}

chanmod::ChannelModel build_channel(const CommonOptions& opts) {
    chanmod::ChannelParams params;
    params.phase_noise_sigma_rad = opts.noise_sigma_rad;
    params.position_jitter_m = opts.pos_jitter_m;
    params.noise_seed = chanmod::parse_seed(opts.noise_seed);
    return chanmod::ChannelModel(build_geometry(opts), params);
}

std::string format_phase(double v) {
    std::array<char, 64> buf{};
    const int n = std::snprintf(buf.data(), buf.size(), "%.9f", v);
    return std::string(buf.data(), static_cast<std::size_t>(n));
}

int run_transmit(const CommonOptions& opts, const std::string& message, const std::string& mode,
                 bool feedback, const std::string& out_path) {
    chanmod::SessionConfig config{
        build_channel(opts), chanmod::parse_seed(opts.key_seed),
        mode == "reversed" ? chanmod::PilotMode::reversed_pilot
                           : chanmod::PilotMode::forward_pilot,
        feedback};

    const chanmod::SessionTrace trace = chanmod::transmit(config, message);
    chanmod::write_trace_file(out_path, trace, message);

    std::cout << "decoded_text=" << trace.decoded_text << '\n';
    std::cout << "bit_errors=" << trace.bit_errors << '\n';
    std::cout << "class_separation_rad=" << format_phase(trace.calibration.class_separation_rad)
              << '\n';
    std::cout << "trace_file=" << out_path << '\n';
    return trace.decoded_text == message ? 0 : 1;
}

int run_sweep(const CommonOptions& opts, const std::vector<double>& sigmas, std::size_t bits,
              const std::string& out_path) {
    chanmod::SessionConfig config{build_channel(opts), chanmod::parse_seed(opts.key_seed),
                                  chanmod::PilotMode::forward_pilot, true};
    const auto points = chanmod::ber_sweep(config, sigmas, bits);

    std::ostringstream csv;
    csv << "sigma_rad,ber\n";
    for (const chanmod::BerPoint& p : points) {
        csv << format_phase(p.sigma_rad) << ',' << format_phase(p.ber) << '\n';
    }

    if (out_path.empty()) {
        std::cout << csv.str();
    } else {
        std::ofstream os(out_path, std::ios::binary);
        if (!os) {
            throw std::runtime_error("cannot open output file: " + out_path);
        }
        os << csv.str();
        os.flush();
        if (!os) {
            throw std::runtime_error("failed writing output file: " + out_path);
        }
    }
    return 0;
}

int run_eavesdrop(const std::string& trace_path, bool knows_tx, bool knows_rx) {
    const chanmod::TraceFile tf = chanmod::read_trace_file(trace_path);
    const chanmod::EavesdropResult result =
        chanmod::eavesdrop(std::span<const chanmod::TraceRecord>(tf.records), knows_tx, knows_rx);
    if (result.status == chanmod::EavesdropStatus::decoded) {
        std::cout << "decoded_text=" << result.text << '\n';
    } else {
        std::cout << "INDETERMINATE: " << result.diagnostic << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"chanmod - channel modulation link simulator"};
    app.require_subcommand(1);

    CommonOptions transmit_opts;
    std::string message;
    std::string mode = "forward";
    bool feedback = true;
    std::string transmit_out = "trace.csv";
    CLI::App* transmit = app.add_subcommand(
        "transmit", "Calibrate, transmit a message, and write the per-bit trace CSV");
    transmit->add_option("--message", message, "ASCII message text")->required();
    add_common_options(*transmit, transmit_opts);
    transmit->add_option("--mode", mode, "Pilot direction during data transfer")
        ->check(CLI::IsMember({"forward", "reversed"}))
        ->capture_default_str();
    transmit->add_flag("--feedback,!--no-feedback", feedback,
                       "Reversed mode: measured channel is fed back to the receiver");
    transmit->add_option("--out", transmit_out, "Trace CSV path")->capture_default_str();

    CommonOptions sweep_opts;
    std::vector<double> sigmas;
    std::size_t bits = 10000;
    std::string sweep_out;
    CLI::App* sweep =
        app.add_subcommand("sweep", "Bit error rate versus phase noise sigma, as CSV");
    sweep->add_option("--sigmas", sigmas, "Comma-separated phase noise sigmas, rad")
        ->required()
        ->delimiter(',');
    sweep->add_option("--bits", bits, "Bits per sweep point")->capture_default_str();
    add_common_options(*sweep, sweep_opts);
    sweep->add_option("--out", sweep_out, "Output CSV path (stdout when omitted)");

    std::string trace_path;
    bool knows_tx = false;
    bool knows_rx = false;
    CLI::App* eavesdrop =
        app.add_subcommand("eavesdrop", "Decode a trace from observed antenna positions");
    eavesdrop->add_option("trace", trace_path, "Trace CSV written by transmit")->required();
    eavesdrop->add_flag("--knows-tx", knows_tx, "Observer sees the transmit antenna positions");
    eavesdrop->add_flag("--knows-rx", knows_rx, "Observer sees the receive antenna positions");

    CLI11_PARSE(app, argc, argv);

    try {
        if (transmit->parsed()) {
            return run_transmit(transmit_opts, message, mode, feedback, transmit_out);
        }
        if (sweep->parsed()) {
            return run_sweep(sweep_opts, sigmas, bits, sweep_out);
        }
        return run_eavesdrop(trace_path, knows_tx, knows_rx);
    } catch (const chanmod::CalibrationError& e) {
        std::cerr << "chanmod: " << e.what() << '\n';
        return 1;
    } catch (const chanmod::TraceParseError& e) {
        std::cerr << "chanmod: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "chanmod: " << e.what() << '\n';
        return 1;
    }
}
