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

#include <rnsdiv/decomposition.hpp>
#include <rnsdiv/inverse_table.hpp>
#include <rnsdiv/trace.hpp>
#include <rnsdiv/value.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace rnsdiv {

enum class DivisionMode {
    /// Decompose the divisor once and replay its script on every iteration.
    Replay,
    /// Re-run the divisor decomposition alongside the dividend every iteration.
    Live,
};

enum class EngineState {
    Idle,
    LoadInit,
    IncDenom,
    DivDenom,
    BaseExtend,
    UpdateAccum,
    CalcNumer,
    Compare,
    CalcRem,
    Done,
    DivByZero,
};

std::string_view to_string(EngineState s) noexcept;

struct DivisionOptions {
    DivisionMode mode = DivisionMode::Replay;
    bool record_trace = false;
    /// Replay this script instead of decomposing the divisor (replay mode).
    std::optional<FactorScript> script;
};

struct DivisionResult {
    RnsValue quotient;
    RnsValue remainder;
    std::size_t iterations = 0;
    std::size_t corrections = 0;
    std::uint64_t cycle_estimate = 0;
    /// Z_1 .. Z_n, each normalized; the last is zero.
    std::vector<RnsValue> partial_quotients;
    FactorScript script;
    Trace trace;
};

/// Result of running a divisor script over a dividend register.
struct NumerScaling {
    /// floor(numer / y_hat), normalized.
    RnsValue z;
    /// The register reached zero part-way and the rest of the script was
    /// skipped.
    bool reached_zero = false;
};

NumerScaling apply_script_to_numer(const RnsValue& numer, const FactorScript& script,
                                   const InverseTable& tbl, Trace* trace = nullptr);

struct Correction {
    RnsValue accum;
    RnsValue remainder;
    std::size_t count = 0;
};

/// While residual >= y: residual -= y, accum += 1.
Correction final_correction(const RnsValue& residual, const RnsValue& y, const RnsValue& accum,
                            const InverseTable& tbl, Trace* trace = nullptr);

/// Quotient and remainder of X / Y computed entirely in RNS.
/// Throws DivideByZero and FormatMismatch.
DivisionResult divide(const RnsValue& x, const RnsValue& y, const InverseTable& tbl,
                      const DivisionOptions& options = {});

/// 2 per MRC digit, 2 per Scale, 1 per Increment, 1 per PAC op, 1 per state
/// transition.
std::uint64_t cycle_estimate(const Trace& trace) noexcept;

} // namespace rnsdiv
