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

#include <rnsdiv/bigint.hpp>
#include <rnsdiv/division.hpp>
#include <rnsdiv/format.hpp>
#include <rnsdiv/inverse_table.hpp>

#include "json.hpp"

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace rnsdiv {

struct DivMod {
    BigInt quotient;
    BigInt remainder;

    friend bool operator==(const DivMod&, const DivMod&) = default;
};

/// Reference division on big integers. Throws RnsError(DivideByZero).
DivMod oracle_divmod(const BigInt& x, const BigInt& y);

struct FuzzCase {
    std::size_t index = 0;
    BigInt x;
    BigInt y;
    std::string stratum;
};

/// Deterministic case stream: a mix of random magnitudes and the edge strata
/// (exact multiples, Y in {1, 2, R-1}, X = 0, X = Y, Y = product - 1).
std::vector<FuzzCase> fuzz_cases(const RnsFormat& fmt, std::size_t count, std::uint64_t seed);

struct FuzzFailure {
    std::size_t index = 0;
    std::string stratum;
    BigInt x;
    BigInt y;
    DivMod expected;
    std::optional<DivMod> got;
    std::string error;
    std::string trace_path;
};

struct FuzzReport {
    std::string label;
    std::size_t cases = 0;
    std::vector<FuzzFailure> failures;

    bool ok() const noexcept { return failures.empty(); }
    std::string to_text() const;
    nlohmann::json to_json() const;
};

struct FuzzOptions {
    std::size_t count = 0;
    std::uint64_t seed = 0;
    DivisionMode mode = DivisionMode::Replay;
    unsigned jobs = 1;
    /// When set, each failure's full trace is written here as JSON.
    std::optional<std::filesystem::path> trace_dir;
};

FuzzReport fuzz_divisions(const InverseTable& tbl, const FuzzOptions& options);

/// Every X in [0, R) against every Y in [1, R).
FuzzReport exhaustive_divisions(const InverseTable& tbl, unsigned jobs = 1);

} // namespace rnsdiv
