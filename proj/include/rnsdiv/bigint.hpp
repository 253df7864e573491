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

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace rnsdiv {

using BigInt = boost::multiprecision::cpp_int;

/// Parses a nonnegative decimal integer of any length. Throws RnsError(Parse).
BigInt parse_decimal(std::string_view text);

std::string to_decimal(const BigInt& value);

/// Low 64 bits of a nonnegative value known to fit.
std::uint64_t to_u64(const BigInt& value);

} // namespace rnsdiv
