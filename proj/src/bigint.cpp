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

#include <rnsdiv/bigint.hpp>
#include <rnsdiv/errors.hpp>

#include <cctype>

namespace rnsdiv {

BigInt parse_decimal(std::string_view text) {
    if (text.empty()) {
        throw RnsError(Errc::Parse, "empty integer");
    }
    BigInt out = 0;
    for (char c : text) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            throw RnsError(Errc::Parse, "not a nonnegative decimal integer: '" + std::string(text) + "'");
        }
        out = out * 10 + (c - '0');
    }
    return out;
}

std::string to_decimal(const BigInt& value) { return value.str(); }

std::uint64_t to_u64(const BigInt& value) { return static_cast<std::uint64_t>(value); }

} // namespace rnsdiv
