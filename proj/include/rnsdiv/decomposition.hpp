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
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace rnsdiv {

struct IncrementStep {
    friend bool operator==(const IncrementStep&, const IncrementStep&) = default;
};

struct ScaleStep {
    std::size_t digit;
    std::uint32_t k;
    std::uint32_t factor;

    friend bool operator==(const ScaleStep&, const ScaleStep&) = default;
};

struct BaseExtendStep {
    friend bool operator==(const BaseExtendStep&, const BaseExtendStep&) = default;
};

using ScriptStep = std::variant<IncrementStep, ScaleStep, BaseExtendStep>;

/// The ordered steps that take a divisor Y to one, and y_hat, the product
/// of the Scale factors (y_hat >= Y).
struct FactorScript {
    std::vector<ScriptStep> steps;
    BigInt y_hat = 1;
    std::size_t increments = 0;

    std::vector<std::uint32_t> factors() const;

    friend bool operator==(const FactorScript&, const FactorScript&) = default;
};

/// The next decomposition step for a working divisor, or nullopt once it is
/// one. Scale picks the lowest-index zero digit with all its available powers;
/// with no zeros, Increment while the base-2 digit is valid, else BaseExtend.
/// A non-normalized value that would wrap on Increment is base-extended first.
std::optional<ScriptStep> next_step(const RnsValue& y);

/// Applies one step to a working divisor.
RnsValue apply_divisor_step(const RnsValue& y, const ScriptStep& step, const InverseTable& tbl,
                            Trace* trace = nullptr);

/// Decomposes Y >= 1 into a FactorScript. Throws DivideByZero for Y = 0 and
/// DecompositionOverflow when Y = R - 1 (no representable increment).
FactorScript decompose(const RnsValue& y, const InverseTable& tbl, Trace* trace = nullptr);

/// Line-oriented text form: `increment`, `scale <digit> <k> <factor>`,
/// `base_extend`, then `y_hat <decimal>`.
std::string serialize_script(const FactorScript& script);

/// Inverse of serialize_script, checked against the format. Throws
/// RnsError(Parse).
FactorScript parse_script(std::string_view text, const RnsFormat& fmt);

std::string describe(const ScriptStep& step, const RnsFormat& fmt);

} // namespace rnsdiv
