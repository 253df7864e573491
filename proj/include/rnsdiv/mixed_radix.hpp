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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace rnsdiv {

/// a_t of a mixed-radix expansion, generated from digit `source` whose
/// current modulus at consumption was `radix`.
struct MixedRadixDigit {
    std::size_t source;
    std::uint32_t radix;
    std::uint32_t a;

    friend bool operator==(const MixedRadixDigit&, const MixedRadixDigit&) = default;
};

/// Running recombination for the digits being base-extended. For each target
/// the weight is the product of the radices consumed so far and the
/// accumulator is sum(a_t * w_t), both modulo the target's full modulus.
class RecombinationState {
public:
    RecombinationState(const RnsFormat& fmt, std::vector<std::size_t> targets);

    /// Cycle 1 accumulates a * weight; cycle 2 advances weight by the radix.
    void consume(const MixedRadixDigit& digit);

    const std::vector<std::size_t>& targets() const noexcept { return targets_; }
    std::uint32_t accumulator(std::size_t target_slot) const { return accum_.at(target_slot); }
    std::size_t steps() const noexcept { return steps_; }

    /// Weight used for the t-th consumed digit, per target slot.
    const std::vector<std::uint32_t>& weight_history(std::size_t target_slot) const {
        return weights_.at(target_slot);
    }
    /// Accumulator after the t-th consumed digit, per target slot.
    const std::vector<std::uint32_t>& partial_history(std::size_t target_slot) const {
        return partials_.at(target_slot);
    }

private:
    std::vector<std::size_t> targets_;
    std::vector<std::uint32_t> moduli_;
    std::vector<std::uint32_t> weight_;
    std::vector<std::uint32_t> accum_;
    std::vector<std::vector<std::uint32_t>> weights_;
    std::vector<std::vector<std::uint32_t>> partials_;
    std::size_t steps_ = 0;
};

/// Mixed-radix conversion of the valid digits, consumed in ascending order of
/// current modulus. Stops as soon as the working value is zero, so trailing
/// zero digits are not emitted.
std::vector<MixedRadixDigit> mrc_digits(const RnsValue& v, const InverseTable& tbl,
                                        Trace* trace = nullptr);

/// sum a_t * prod(earlier radices).
BigInt mrc_value(std::span<const MixedRadixDigit> digits);

/// Magnitude comparison through mixed-radix digits. Operands need the same
/// format and power pattern.
std::strong_ordering compare(const RnsValue& a, const RnsValue& b, const InverseTable& tbl,
                             Trace* trace = nullptr);

struct BaseExtension {
    RnsValue value;
    std::vector<MixedRadixDigit> digits;
    RecombinationState recombination;
};

/// Restores every digit below full power (invalid or reduced) to its full
/// modulus in a single conversion pass. Throws RangeInsufficient when no
/// valid digit remains to convert from.
BaseExtension base_extend_detailed(const RnsValue& v, const InverseTable& tbl,
                                   Trace* trace = nullptr);

RnsValue base_extend(const RnsValue& v, const InverseTable& tbl, Trace* trace = nullptr);

} // namespace rnsdiv
