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

#include "chanmod/trace_io.hpp"

#include <array>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>

namespace chanmod {

namespace {

constexpr std::string_view kMagicLine = "# chanmod trace v1";
constexpr std::string_view kColumnHeader =
    "index,message_bit,key_bit,tx_pos,rx_pos,true_channel_bit,"
    "true_phase_rad,measured_phase_rad,decided_channel_bit,decoded_bit";

// Shortest round-trip decimal form, same on every platform.
std::string format_double(double v) {
    std::array<char, 64> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), ptr);
}

std::string format_phase(double v) {
    std::array<char, 64> buf{};
    const int n = std::snprintf(buf.data(), buf.size(), "%.9f", v);
    return std::string(buf.data(), static_cast<std::size_t>(n));
}

std::string escape_message(std::string_view message) {
    std::string out;
    out.reserve(message.size());
    for (char c : message) {
        switch (c) {
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            default: out.push_back(c);
        }
    }
    return out;
}

std::string unescape_message(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] != '\\') {
            out.push_back(text[i]);
            continue;
        }
        if (i + 1 >= text.size()) {
            throw TraceParseError("trace header: dangling escape in message");
        }
        switch (text[++i]) {
            case '\\': out.push_back('\\'); break;
            case 'n': out.push_back('\n'); break;
            case 'r': out.push_back('\r'); break;
            default: throw TraceParseError("trace header: unknown escape in message");
        }
    }
    return out;
}

[[noreturn]] void fail_line(std::size_t line_no, const std::string& what) {
    throw TraceParseError("trace line " + std::to_string(line_no) + ": " + what);
}

double parse_double_field(std::string_view field, std::size_t line_no, const char* name) {
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size()) {
        fail_line(line_no, std::string("bad ") + name + " value '" + std::string(field) + "'");
    }
    return value;
}

std::uint64_t parse_u64_field(std::string_view field, std::size_t line_no, const char* name) {
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size()) {
        fail_line(line_no, std::string("bad ") + name + " value '" + std::string(field) + "'");
    }
    return value;
}

int parse_bit_field(std::string_view field, std::size_t line_no, const char* name) {
    if (field == "0") return 0;
    if (field == "1") return 1;
    fail_line(line_no, std::string(name) + " must be 0 or 1, got '" + std::string(field) + "'");
}

std::vector<std::string_view> split_csv(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            fields.push_back(line.substr(start));
            return fields;
        }
        fields.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
}

}  // namespace

void write_trace(std::ostream& os, const SessionTrace& trace, std::string_view message) {
    const SessionSummary& s = trace.summary;
    os << kMagicLine << '\n';
    os << "# freq_hz=" << format_double(s.carrier_frequency_hz) << '\n';
    os << "# baseline_m=" << format_double(s.baseline_m) << '\n';
    os << "# displacement_m=" << format_double(s.displacement_m) << '\n';
    os << "# noise_sigma_rad=" << format_double(s.phase_noise_sigma_rad) << '\n';
    os << "# pos_jitter_m=" << format_double(s.position_jitter_m) << '\n';
    os << "# key_seed=" << s.key_seed << '\n';
    os << "# noise_seed=" << s.noise_seed << '\n';
    os << "# mode=" << (s.mode == PilotMode::forward_pilot ? "forward" : "reversed") << '\n';
    os << "# feedback=" << (s.feedback_available ? 1 : 0) << '\n';
    os << "# message=" << escape_message(message) << '\n';
    os << kColumnHeader << '\n';
    for (const TraceRecord& r : trace.records) {
        os << r.index << ',' << r.message_bit << ',' << r.key_bit << ',' << to_bit(r.tx_pos)
           << ',' << to_bit(r.rx_pos) << ',' << r.true_channel_bit << ','
           << format_phase(r.true_phase_rad) << ',' << format_phase(r.measured_phase_rad) << ','
           << r.decided_channel_bit << ',' << r.decoded_bit << '\n';
    }
}

void write_trace_file(const std::filesystem::path& path, const SessionTrace& trace,
                      std::string_view message) {
    std::ofstream os(path, std::ios::binary);
    if (!os) {
        throw std::runtime_error("cannot open trace file for writing: " + path.string());
    }
    write_trace(os, trace, message);
    os.flush();
    if (!os) {
        throw std::runtime_error("failed writing trace file: " + path.string());
    }
}

TraceFile read_trace(std::istream& is) {
    TraceFile out{};
    std::string line;
    std::size_t line_no = 0;

    if (!std::getline(is, line)) {
        throw TraceParseError("empty trace");
    }
    ++line_no;
    if (line != kMagicLine) {
        fail_line(line_no, "missing '" + std::string(kMagicLine) + "' marker");
    }

    std::map<std::string, std::string, std::less<>> kv;
    while (std::getline(is, line)) {
        ++line_no;
        if (!line.starts_with("# ")) {
            break;
        }
        const std::string_view body = std::string_view(line).substr(2);
        const std::size_t eq = body.find('=');
        if (eq == std::string_view::npos) {
            fail_line(line_no, "header comment without key=value");
        }
        kv.emplace(std::string(body.substr(0, eq)), std::string(body.substr(eq + 1)));
    }

    auto need = [&](const char* key) -> const std::string& {
        const auto it = kv.find(key);
        if (it == kv.end()) {
            throw TraceParseError(std::string("trace header: missing key '") + key + "'");
        }
        return it->second;
    };

    out.summary.carrier_frequency_hz = parse_double_field(need("freq_hz"), line_no, "freq_hz");
    out.summary.baseline_m = parse_double_field(need("baseline_m"), line_no, "baseline_m");
    out.summary.displacement_m =
        parse_double_field(need("displacement_m"), line_no, "displacement_m");
    out.summary.phase_noise_sigma_rad =
        parse_double_field(need("noise_sigma_rad"), line_no, "noise_sigma_rad");
    out.summary.position_jitter_m =
        parse_double_field(need("pos_jitter_m"), line_no, "pos_jitter_m");
    out.summary.key_seed = parse_u64_field(need("key_seed"), line_no, "key_seed");
    out.summary.noise_seed = parse_u64_field(need("noise_seed"), line_no, "noise_seed");

    const std::string& mode = need("mode");
    if (mode == "forward") {
        out.summary.mode = PilotMode::forward_pilot;
    } else if (mode == "reversed") {
        out.summary.mode = PilotMode::reversed_pilot;
    } else {
        throw TraceParseError("trace header: mode must be forward or reversed, got '" + mode +
                              "'");
    }
    out.summary.feedback_available = parse_bit_field(need("feedback"), line_no, "feedback") == 1;
    out.message = unescape_message(need("message"));

    // `line` now holds the first non-comment line, which must be the column header.
    if (line != kColumnHeader) {
        fail_line(line_no, "expected column header '" + std::string(kColumnHeader) + "'");
    }

    while (std::getline(is, line)) {
        ++line_no;
        if (line.empty()) {
            fail_line(line_no, "blank record line");
        }
        const auto fields = split_csv(line);
        if (fields.size() != 10) {
            fail_line(line_no, "expected 10 fields, got " + std::to_string(fields.size()));
        }
        TraceRecord rec{};
        rec.index = parse_u64_field(fields[0], line_no, "index");
        rec.message_bit = parse_bit_field(fields[1], line_no, "message_bit");
        rec.key_bit = parse_bit_field(fields[2], line_no, "key_bit");
        rec.tx_pos = to_position_bit(parse_bit_field(fields[3], line_no, "tx_pos"));
        rec.rx_pos = to_position_bit(parse_bit_field(fields[4], line_no, "rx_pos"));
        rec.true_channel_bit = parse_bit_field(fields[5], line_no, "true_channel_bit");
        rec.true_phase_rad = parse_double_field(fields[6], line_no, "true_phase_rad");
        rec.measured_phase_rad = parse_double_field(fields[7], line_no, "measured_phase_rad");
        rec.decided_channel_bit = parse_bit_field(fields[8], line_no, "decided_channel_bit");
        rec.decoded_bit = parse_bit_field(fields[9], line_no, "decoded_bit");
        out.records.push_back(rec);
    }
    return out;
}

TraceFile read_trace_file(const std::filesystem::path& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) {
        throw TraceParseError("cannot open trace file: " + path.string());
    }
    return read_trace(is);
}

}  // namespace chanmod
