// Copyright 2026 The exitplan Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef EXITPLAN_TRACE_IO_HPP_
#define EXITPLAN_TRACE_IO_HPP_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "exitplan/planner.hpp"

namespace exitplan
{

/// Trace files use this extension; dataset discovery matches on it.
inline constexpr const char * kTraceExtension = ".trace";

/// Serializes one scenario to the line-oriented trace format:
///
///   trace <id> layers <L> horizon <T> dt <dt>
///   ref <x1> <y1> ... <xT> <yT>
///   layer 1 <x1> <y1> ... <xT> <yT>
///   ...
///   layer L <x1> <y1> ... <xT> <yT>
///
/// Coordinates and dt are written as the shortest decimal that parses back to
/// the exact binary value (up to 17 significant digits), so a save/load
/// round-trip is bit-exact.
std::string trace_to_string(const ScenarioTrace & trace);

/// Parses the trace format; `origin` names the source in error messages.
/// Record order is fixed, layer indices must run 1..L, and trailing fields or
/// records beyond the expected ones are rejected.
ScenarioTrace trace_from_string(std::string_view text, const std::string & origin);

ScenarioTrace load_trace(const std::filesystem::path & path);

void save_trace(const ScenarioTrace & trace, const std::filesystem::path & path);

/// All *.trace files directly under dir, sorted lexicographically by filename
/// for deterministic iteration order.
std::vector<std::filesystem::path> list_trace_files(const std::filesystem::path & dir);

/// FNV-1a 64-bit content hash of a trace file set ("fnv1a64:<16 hex digits>").
/// Hashes file names and bytes in the given order.
std::string dataset_digest(const std::vector<std::filesystem::path> & files);

/// Digest of in-memory traces, hashing their serialized form under their
/// scenario ids. Matches dataset_digest() for files written by save_trace()
/// when the file stem equals the scenario id.
std::string dataset_digest(const std::vector<ScenarioTrace> & traces);

}  // namespace exitplan

#endif  // EXITPLAN_TRACE_IO_HPP_
