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

#include <rnsdiv/format.hpp>

#include <filesystem>
#include <string_view>

namespace rnsdiv {

/// Reads a format description:
///
///     # comment
///     width 9
///     power 2 8
///     plain 457
///
/// Throws RnsError(Parse) on malformed lines; format validation errors come
/// from make_format.
FormatPtr parse_format_config(std::string_view text);
FormatPtr load_format_config(const std::filesystem::path& path);

} // namespace rnsdiv
