// Copyright 2026 The rnsdiv Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <rnsdiv/trace.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rnsdiv {

enum class TraceFormat { Markdown, Csv, Json };

std::optional<TraceFormat> parse_trace_format(std::string_view name) noexcept;

/// Renders trace rows. Markdown follows the worked-example table layout and
/// repeats the "Digit modulus" header whenever the moduli change; CSV has one
/// line per row; JSON is an array of row objects.
std::string emit_trace(const std::vector<TraceRow>& rows, TraceFormat format);

/// Parses the JSON produced by emit_trace. Throws RnsError(Parse).
std::vector<TraceRow> parse_trace_json(std::string_view text);

} // namespace rnsdiv
