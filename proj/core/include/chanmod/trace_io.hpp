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

#ifndef CHANMOD_TRACE_IO_HPP
#define CHANMOD_TRACE_IO_HPP

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "chanmod/link.hpp"

namespace chanmod {

// Trace CSV, fixed byte-for-byte so independent implementations can diff
// traces: a "# key=value" comment block carrying the full run configuration
// (doubles in shortest round-trip form), one column header line, then one
// row per bit with phases printed to 9 decimal digits. LF newlines.

class TraceParseError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct TraceFile {
    SessionSummary summary;
    std::string message;
    std::vector<TraceRecord> records;
};

void write_trace(std::ostream& os, const SessionTrace& trace, std::string_view message);
void write_trace_file(const std::filesystem::path& path, const SessionTrace& trace,
                      std::string_view message);

TraceFile read_trace(std::istream& is);
TraceFile read_trace_file(const std::filesystem::path& path);

}  // namespace chanmod

#endif  // CHANMOD_TRACE_IO_HPP
