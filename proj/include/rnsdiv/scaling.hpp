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

#include <rnsdiv/inverse_table.hpp>
#include <rnsdiv/trace.hpp>
#include <rnsdiv/value.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>

namespace rnsdiv {

/// Divide out base_digit^k.
struct ScaleFactor {
    std::size_t digit;
    std::uint32_t k;

    friend bool operator==(const ScaleFactor&, const ScaleFactor&) = default;
};

/// Exact division of v by base_i^k. Digit i is divided directly and loses k
/// powers (becoming invalid at zero); every other valid digit is multiplied by
/// the inverse of base_i^k at its current modulus.
///
/// Throws DigitInvalid, PowerExceeded (k = 0 or k > power_i) and NotDivisible.
RnsValue scale_by_power(const RnsValue& v, std::size_t i, std::uint32_t k,
                        const InverseTable& tbl, Trace* trace = nullptr);

/// Left fold of scale_by_power. Failures surface as StepError.
RnsValue multi_factor_scale(const RnsValue& v, std::span<const ScaleFactor> factors,
                            const InverseTable& tbl, Trace* trace = nullptr);

/// value_i mod base_i^k: the least t making decode(v) - t divisible by
/// base_i^k.
std::uint32_t offset_for(const RnsValue& v, std::size_t i, std::uint32_t k);

/// Maps an integer factor such as 125 or 16 to the digit whose base it is a
/// power of. nullopt when it is not a power (1..P) of any power-based base.
std::optional<ScaleFactor> factor_for(const RnsFormat& fmt, std::uint64_t factor);

/// The inverse row shown before a scaling: inverse of base_i^k at every other
/// valid digit, '*' at digit i and at invalid digits.
std::vector<std::optional<std::uint32_t>> inverse_cells(const RnsValue& v, std::size_t i,
                                                        std::uint32_t k,
                                                        const InverseTable& tbl);

} // namespace rnsdiv
