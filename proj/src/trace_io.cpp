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

#include "exitplan/trace_io.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <sstream>

#include "exitplan/error.hpp"
#include "exitplan/numeric_text.hpp"

namespace exitplan
{

namespace
{

constexpr std::uint64_t kFnvOffset = 0xcbf29ce484222325ULL;
constexpr std::uint64_t kFnvPrime = 0x00000100000001b3ULL;

void fnv1a_update(std::uint64_t & hash, std::string_view bytes)
{
  for (const char c : bytes) {
    hash ^= static_cast<std::uint8_t>(c);
    hash *= kFnvPrime;
  }
}

std::string fnv1a_hex(std::uint64_t hash)
{
  static const char * digits = "0123456789abcdef";
  std::string hex(16, '0');
  for (int i = 15; i >= 0; --i) {
    hex[static_cast<std::size_t>(i)] = digits[hash & 0xf];
    hash >>= 4;
  }
  return "fnv1a64:" + hex;
}

std::vector<std::string_view> split_tokens(std::string_view line)
{
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) {
      ++pos;
    }
    const std::size_t start = pos;
    while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t') {
      ++pos;
    }
    if (pos > start) {
      tokens.push_back(line.substr(start, pos - start));
    }
  }
  return tokens;
}

// Parser over pre-split lines, tracking line numbers for diagnostics.
class TraceParser
{
public:
  TraceParser(std::string_view text, const std::string & origin) : origin_(origin)
  {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t newline = text.find('\n', pos);
      if (newline == std::string_view::npos) {
        newline = text.size();
      }
      std::string_view line = text.substr(pos, newline - pos);
      if (!line.empty() && line.back() == '\r') {
        line.remove_suffix(1);
      }
      lines_.push_back(line);
      if (newline == text.size()) {
        break;
      }
      pos = newline + 1;
    }
  }

  ScenarioTrace parse()
  {
    const auto header = next_record("header");
    expect_size(header, 8, "header");
    expect_keyword(header[0], "trace", 0);
    const std::string scenario_id(header[1]);
    expect_keyword(header[2], "layers", 2);
    const int total_layers = parse_count(header[3], "total_layers");
    expect_keyword(header[4], "horizon", 4);
    const int horizon_steps = parse_count(header[5], "horizon");
    expect_keyword(header[6], "dt", 6);
    const double dt = parse_number(header[7], "dt");
    if (!(dt > 0.0)) {
      fail("dt must be positive, got " + std::string(header[7]));
    }

    const Trajectoryd reference = parse_points_record("ref", horizon_steps, dt, std::nullopt);
    std::vector<Trajectoryd> per_layer;
    per_layer.reserve(static_cast<std::size_t>(total_layers));
    for (int layer = 1; layer <= total_layers; ++layer) {
      per_layer.push_back(parse_points_record("layer", horizon_steps, dt, layer));
    }
    expect_end();

    try {
      return ScenarioTrace(scenario_id, reference, std::move(per_layer));
    } catch (const std::exception & e) {
      throw TraceFormatError(origin_ + ": " + e.what());
    }
  }

private:
  [[noreturn]] void fail(const std::string & message) const
  {
    throw TraceFormatError(origin_ + ":" + std::to_string(line_number_) + ": " + message);
  }

  std::vector<std::string_view> next_record(const std::string & expecting)
  {
    while (cursor_ < lines_.size()) {
      line_number_ = cursor_ + 1;
      const auto tokens = split_tokens(lines_[cursor_]);
      ++cursor_;
      if (!tokens.empty()) {
        return tokens;
      }
      // Blank lines are only tolerated at end of file.
      for (std::size_t rest = cursor_; rest < lines_.size(); ++rest) {
        if (!split_tokens(lines_[rest]).empty()) {
          fail("blank line in the middle of a trace");
        }
      }
      break;
    }
    line_number_ = lines_.size();
    throw TraceFormatError(
      origin_ + ": unexpected end of file, expected " + expecting + " record");
  }

  void expect_end()
  {
    while (cursor_ < lines_.size()) {
      line_number_ = cursor_ + 1;
      if (!split_tokens(lines_[cursor_]).empty()) {
        fail("unexpected trailing record after the last layer");
      }
      ++cursor_;
    }
  }

  void expect_size(
    const std::vector<std::string_view> & tokens, std::size_t expected, const std::string & what)
  {
    if (tokens.size() < expected) {
      fail(what + " record has " + std::to_string(tokens.size()) + " fields, expected " +
           std::to_string(expected));
    }
    if (tokens.size() > expected) {
      fail(
        "unknown trailing field '" + std::string(tokens[expected]) + "' in " + what + " record");
    }
  }

  void expect_keyword(std::string_view token, std::string_view keyword, std::size_t position)
  {
    if (token != keyword) {
      fail(
        "expected keyword '" + std::string(keyword) + "' at field " + std::to_string(position) +
        ", got '" + std::string(token) + "'");
    }
  }

  int parse_count(std::string_view token, const std::string & field)
  {
    const auto value = parse_integer(token);
    if (!value || *value < 1 || *value > 1'000'000) {
      fail(field + " must be a positive integer, got '" + std::string(token) + "'");
    }
    return static_cast<int>(*value);
  }

  double parse_number(std::string_view token, const std::string & field)
  {
    const auto value = parse_decimal(token);
    if (!value) {
      fail(field + " is not a decimal number: '" + std::string(token) + "'");
    }
    return *value;
  }

  Trajectoryd parse_points_record(
    const std::string & keyword, int horizon_steps, double dt, std::optional<int> layer_index)
  {
    const std::string what =
      layer_index ? "layer " + std::to_string(*layer_index) : std::string("reference");
    const auto tokens = next_record(what);
    std::size_t coord_start = 1;
    if (layer_index) {
      expect_keyword(tokens[0], "layer", 0);
      if (tokens.size() < 2) {
        fail("layer record missing its index");
      }
      const auto index = parse_integer(tokens[1]);
      if (!index || static_cast<int>(*index) != *layer_index) {
        fail(
          "expected layer " + std::to_string(*layer_index) + " record, got '" +
          std::string(tokens[1]) + "'");
      }
      coord_start = 2;
    } else {
      expect_keyword(tokens[0], "ref", 0);
    }

    const std::size_t coord_count = tokens.size() - coord_start;
    if (coord_count != static_cast<std::size_t>(horizon_steps) * 2) {
      fail(
        what + " has " + std::to_string(coord_count / 2) + " points, expected " +
        std::to_string(horizon_steps) +
        (coord_count % 2 != 0 ? " (odd coordinate count)" : ""));
    }

    Trajectoryd::PointMatrix points(horizon_steps, 2);
    for (int t = 0; t < horizon_steps; ++t) {
      const std::size_t base = coord_start + static_cast<std::size_t>(t) * 2;
      points(t, 0) = parse_number(tokens[base], what + " x[" + std::to_string(t + 1) + "]");
      points(t, 1) = parse_number(tokens[base + 1], what + " y[" + std::to_string(t + 1) + "]");
    }
    try {
      return Trajectoryd(std::move(points), dt);
    } catch (const std::exception & e) {
      fail(what + ": " + e.what());
    }
  }

  std::string origin_;
  std::vector<std::string_view> lines_;
  std::size_t cursor_ = 0;
  std::size_t line_number_ = 0;
};

void append_points(std::string & out, const Trajectoryd & trajectory)
{
  for (Eigen::Index t = 0; t < trajectory.size(); ++t) {
    out += ' ';
    out += format_decimal(trajectory.points()(t, 0));
    out += ' ';
    out += format_decimal(trajectory.points()(t, 1));
  }
  out += '\n';
}

}  // namespace

std::string trace_to_string(const ScenarioTrace & trace)
{
  std::string out;
  out += "trace " + trace.scenario_id() + " layers " + std::to_string(trace.total_layers()) +
         " horizon " + std::to_string(trace.reference().size()) + " dt " +
         format_decimal(trace.reference().dt()) + "\n";
  out += "ref";
  append_points(out, trace.reference());
  for (int layer = 1; layer <= trace.total_layers(); ++layer) {
    out += "layer " + std::to_string(layer);
    append_points(out, trace.layer(layer));
  }
  return out;
}

ScenarioTrace trace_from_string(std::string_view text, const std::string & origin)
{
  return TraceParser(text, origin).parse();
}

ScenarioTrace load_trace(const std::filesystem::path & path)
{
  std::ifstream file(path, std::ios::binary);
  if (!file) {
    throw TraceFormatError("cannot open trace file: " + path.string());
  }
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return trace_from_string(buffer.str(), path.string());
}

void save_trace(const ScenarioTrace & trace, const std::filesystem::path & path)
{
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) {
    throw Error("cannot open for writing: " + path.string());
  }
  file << trace_to_string(trace);
  if (!file.good()) {
    throw Error("write failed: " + path.string());
  }
}

std::vector<std::filesystem::path> list_trace_files(const std::filesystem::path & dir)
{
  if (!std::filesystem::is_directory(dir)) {
    throw DatasetError("dataset directory does not exist: " + dir.string());
  }
  std::vector<std::filesystem::path> files;
  for (const auto & entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == kTraceExtension) {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end(), [](const auto & a, const auto & b) {
    return a.filename().string() < b.filename().string();
  });
  return files;
}

std::string dataset_digest(const std::vector<std::filesystem::path> & files)
{
  std::uint64_t hash = kFnvOffset;
  for (const auto & path : files) {
    std::ifstream file(path, std::ios::binary);
    if (!file) {
      throw TraceFormatError("cannot open trace file: " + path.string());
    }
    std::ostringstream buffer;
    buffer << file.rdbuf();
    fnv1a_update(hash, path.stem().string());
    fnv1a_update(hash, std::string_view("\0", 1));
    fnv1a_update(hash, buffer.str());
    fnv1a_update(hash, std::string_view("\0", 1));
  }
  return fnv1a_hex(hash);
}

std::string dataset_digest(const std::vector<ScenarioTrace> & traces)
{
  std::uint64_t hash = kFnvOffset;
  for (const auto & trace : traces) {
    fnv1a_update(hash, trace.scenario_id());
    fnv1a_update(hash, std::string_view("\0", 1));
    fnv1a_update(hash, trace_to_string(trace));
    fnv1a_update(hash, std::string_view("\0", 1));
  }
  return fnv1a_hex(hash);
}

}  // namespace exitplan
