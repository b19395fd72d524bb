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

#ifndef EXITPLAN_NUMERIC_TEXT_HPP_
#define EXITPLAN_NUMERIC_TEXT_HPP_

#include <charconv>
#include <optional>
#include <string>
#include <string_view>
#include <system_error>

namespace exitplan
{

/// Shortest decimal text that parses back to exactly `value` (up to 17
/// significant digits). Locale-independent.
inline std::string format_decimal(double value)
{
  char buffer[32];
  const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, result.ptr);
}

/// Locale-independent double parse; the whole token must be consumed.
inline std::optional<double> parse_decimal(std::string_view token)
{
  double value = 0.0;
  const char * begin = token.data();
  const char * end = token.data() + token.size();
  const auto result = std::from_chars(begin, end, value);
  if (result.ec != std::errc{} || result.ptr != end) {
    return std::nullopt;
  }
  return value;
}

inline std::optional<long long> parse_integer(std::string_view token)
{
  long long value = 0;
  const char * begin = token.data();
  const char * end = token.data() + token.size();
  const auto result = std::from_chars(begin, end, value);
  if (result.ec != std::errc{} || result.ptr != end) {
    return std::nullopt;
  }
  return value;
}

}  // namespace exitplan

#endif  // EXITPLAN_NUMERIC_TEXT_HPP_
