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
#include <rnsdiv/format.hpp>

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace rnsdiv {

/// One residue register. `power` counts the remaining powers of the digit's
/// base; zero marks the digit invalid and `value` is then stale.
struct DigitState {
    std::uint32_t value = 0;
    std::uint32_t power = 0;

    bool valid() const noexcept { return power > 0; }

    friend bool operator==(const DigitState&, const DigitState&) = default;
};

/// A value in (a possibly reduced form of) an RNS format.
class RnsValue {
public:
    RnsValue(FormatPtr fmt, std::vector<DigitState> digits);

    const RnsFormat& format() const noexcept { return *fmt_; }
    const FormatPtr& format_ptr() const noexcept { return fmt_; }
    std::size_t size() const noexcept { return digits_.size(); }

    std::span<const DigitState> digits() const noexcept { return digits_; }
    const DigitState& operator[](std::size_t i) const { return digits_.at(i); }

    bool valid(std::size_t i) const { return digits_.at(i).valid(); }
    std::uint32_t value(std::size_t i) const { return digits_.at(i).value; }
    std::uint32_t power(std::size_t i) const { return digits_.at(i).power; }

    /// base_i^power_i, or 1 for an invalid digit.
    std::uint32_t current_modulus(std::size_t i) const;

    /// Sets digit i; value is reduced modulo base_i^power.
    void set(std::size_t i, std::uint32_t value, std::uint32_t power);

    /// Every digit at its full power.
    bool normalized() const noexcept;
    bool any_valid() const noexcept;

    /// Same format and the same per-digit power pattern.
    bool same_pattern(const RnsValue& other) const noexcept;

    /// Digit-for-digit equality; stale values in invalid digits are ignored.
    friend bool operator==(const RnsValue& a, const RnsValue& b) noexcept;

private:
    FormatPtr fmt_;
    std::vector<DigitState> digits_;
};

/// Normalized encoding of 0 <= x < R. Throws RnsError(OutOfRange).
RnsValue encode(const BigInt& x, const FormatPtr& fmt);

/// The unique integer below effective_range(v) matching every valid digit.
/// The all-invalid value decodes to 0.
BigInt decode(const RnsValue& v);

/// Value with v's power pattern holding the constant c on every valid digit.
RnsValue constant_like(const RnsValue& v, std::uint64_t c);

/// Digit-wise modular arithmetic at each valid digit's current modulus.
/// Operands must share format (FormatMismatch) and power pattern
/// (ValidityMismatch).
RnsValue pac_add(const RnsValue& a, const RnsValue& b);
RnsValue pac_sub(const RnsValue& a, const RnsValue& b);
RnsValue pac_mul(const RnsValue& a, const RnsValue& b);

/// Broadcast subtract of a small constant from every valid digit. The caller
/// guarantees t <= decode(v).
RnsValue subtract_scalar(const RnsValue& v, std::uint64_t t);

/// Adds one to every valid digit.
RnsValue increment(const RnsValue& v);

/// True when v + 1 would wrap to zero, i.e. decode(v) == effective_range - 1.
bool increment_wraps(const RnsValue& v) noexcept;

/// Largest k <= power_i with base_i^k dividing digit i. Throws DigitInvalid.
std::uint32_t divisible_powers(const RnsValue& v, std::size_t i);

struct ZeroDigit {
    std::size_t index;
    std::uint32_t powers;

    friend bool operator==(const ZeroDigit&, const ZeroDigit&) = default;
};

/// Valid power-based digits divisible by at least one power of their base.
std::vector<ZeroDigit> any_zero(const RnsValue& v);

BigInt effective_range(const RnsValue& v);

/// All valid digits zero (vacuously true when none are valid).
bool is_zero(const RnsValue& v) noexcept;

/// At least one valid digit and all valid digits equal one.
bool is_one(const RnsValue& v) noexcept;

} // namespace rnsdiv
