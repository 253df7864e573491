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

#include <rnsdiv/errors.hpp>
#include <rnsdiv/inverse_table.hpp>
#include <rnsdiv/value.hpp>

#include <cassert>

namespace rnsdiv {

RnsValue::RnsValue(FormatPtr fmt, std::vector<DigitState> digits)
    : fmt_(std::move(fmt)), digits_(std::move(digits)) {
    if (!fmt_ || digits_.size() != fmt_->size()) {
        throw RnsError(Errc::FormatMismatch, "digit count does not match the format");
    }
    for (std::size_t i = 0; i < digits_.size(); ++i) {
        const auto& s = (*fmt_)[i];
        auto& d = digits_[i];
        if (d.power > s.max_power) {
            throw RnsError(Errc::PowerExceeded, "digit " + std::to_string(i + 1) + " power exceeds " +
                                                    std::to_string(s.max_power));
        }
        if (d.valid() && d.value >= s.modulus_at(d.power)) {
            throw RnsError(Errc::OutOfRange, "digit " + std::to_string(i + 1) + " value " +
                                                 std::to_string(d.value) + " exceeds its modulus");
        }
    }
}

std::uint32_t RnsValue::current_modulus(std::size_t i) const {
    return (*fmt_)[i].modulus_at(digits_.at(i).power);
}

void RnsValue::set(std::size_t i, std::uint32_t value, std::uint32_t power) {
    const auto& s = (*fmt_)[i];
    assert(power <= s.max_power);
    auto& d = digits_.at(i);
    d.power = power;
    d.value = power > 0 ? value % s.modulus_at(power) : value;
}

bool RnsValue::normalized() const noexcept {
    for (std::size_t i = 0; i < digits_.size(); ++i) {
        if (digits_[i].power != (*fmt_)[i].max_power) {
            return false;
        }
    }
    return true;
}

bool RnsValue::any_valid() const noexcept {
    for (const auto& d : digits_) {
        if (d.valid()) {
            return true;
        }
    }
    return false;
}

bool RnsValue::same_pattern(const RnsValue& other) const noexcept {
    if (!(fmt_ == other.fmt_ || *fmt_ == *other.fmt_) || digits_.size() != other.digits_.size()) {
        return false;
    }
    for (std::size_t i = 0; i < digits_.size(); ++i) {
        if (digits_[i].power != other.digits_[i].power) {
            return false;
        }
    }
    return true;
}

bool operator==(const RnsValue& a, const RnsValue& b) noexcept {
    if (!a.same_pattern(b)) {
        return false;
    }
    for (std::size_t i = 0; i < a.digits_.size(); ++i) {
        if (a.digits_[i].valid() && a.digits_[i].value != b.digits_[i].value) {
            return false;
        }
    }
    return true;
}

RnsValue encode(const BigInt& x, const FormatPtr& fmt) {
    if (x < 0 || x >= fmt->range()) {
        throw RnsError(Errc::OutOfRange, x.str() + " is outside [0, R)");
    }
    std::vector<DigitState> digits;
    digits.reserve(fmt->size());
    for (const auto& s : fmt->specs()) {
        digits.push_back({static_cast<std::uint32_t>(x % s.modulus), s.max_power});
    }
    return RnsValue(fmt, std::move(digits));
}

// Garner recombination over the valid digits in format order.
BigInt decode(const RnsValue& v) {
    std::vector<std::uint64_t> moduli;
    std::vector<std::uint64_t> residues;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v.valid(i)) {
            moduli.push_back(v.current_modulus(i));
            residues.push_back(v.value(i));
        }
    }
    BigInt result = 0;
    BigInt weight = 1;
    std::vector<std::uint64_t> coeffs;
    for (std::size_t t = 0; t < moduli.size(); ++t) {
        const std::uint64_t m = moduli[t];
        // Value of the partial expansion and of the running weight, mod m.
        std::uint64_t partial = 0;
        std::uint64_t w = 1;
        for (std::size_t s = 0; s < t; ++s) {
            partial = (partial + coeffs[s] * w) % m;
            w = (w * (moduli[s] % m)) % m;
        }
        const std::uint64_t diff = (residues[t] + m - partial) % m;
        const std::uint64_t a = diff * mod_inverse(w, m) % m;
        coeffs.push_back(a);
        result += weight * a;
        weight *= m;
    }
    return result;
}

RnsValue constant_like(const RnsValue& v, std::uint64_t c) {
    RnsValue out = v;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v.valid(i)) {
            out.set(i, static_cast<std::uint32_t>(c % v.current_modulus(i)), v.power(i));
        }
    }
    return out;
}

namespace {

void require_compatible(const RnsValue& a, const RnsValue& b) {
    if (!(a.format_ptr() == b.format_ptr() || a.format() == b.format())) {
        throw RnsError(Errc::FormatMismatch, "operands use different formats");
    }
    if (!a.same_pattern(b)) {
        throw RnsError(Errc::ValidityMismatch, "operands have different digit power patterns");
    }
}

template <class Op>
RnsValue digitwise(const RnsValue& a, const RnsValue& b, Op op) {
    require_compatible(a, b);
    RnsValue out = a;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a.valid(i)) {
            const std::uint64_t m = a.current_modulus(i);
            out.set(i, static_cast<std::uint32_t>(op(a.value(i), b.value(i), m)), a.power(i));
        }
    }
    return out;
}

} // namespace

RnsValue pac_add(const RnsValue& a, const RnsValue& b) {
    return digitwise(a, b, [](std::uint64_t x, std::uint64_t y, std::uint64_t m) { return (x + y) % m; });
}

RnsValue pac_sub(const RnsValue& a, const RnsValue& b) {
    return digitwise(a, b, [](std::uint64_t x, std::uint64_t y, std::uint64_t m) { return (x + m - y) % m; });
}

RnsValue pac_mul(const RnsValue& a, const RnsValue& b) {
    return digitwise(a, b, [](std::uint64_t x, std::uint64_t y, std::uint64_t m) { return x * y % m; });
}

RnsValue subtract_scalar(const RnsValue& v, std::uint64_t t) {
    RnsValue out = v;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v.valid(i)) {
            const std::uint64_t m = v.current_modulus(i);
            out.set(i, static_cast<std::uint32_t>((v.value(i) + m - t % m) % m), v.power(i));
        }
    }
    return out;
}

RnsValue increment(const RnsValue& v) {
    RnsValue out = v;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v.valid(i)) {
            out.set(i, (v.value(i) + 1) % v.current_modulus(i), v.power(i));
        }
    }
    return out;
}

bool increment_wraps(const RnsValue& v) noexcept {
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v.valid(i) && v.value(i) + 1 != v.current_modulus(i)) {
            return false;
        }
    }
    return v.any_valid();
}

std::uint32_t divisible_powers(const RnsValue& v, std::size_t i) {
    if (!v.valid(i)) {
        throw RnsError(Errc::DigitInvalid, "digit " + std::to_string(i + 1) + " is invalid");
    }
    const std::uint32_t base = v.format()[i].base;
    std::uint32_t value = v.value(i);
    const std::uint32_t power = v.power(i);
    if (value == 0) {
        return power;
    }
    std::uint32_t k = 0;
    while (k < power && value % base == 0) {
        value /= base;
        ++k;
    }
    return k;
}

std::vector<ZeroDigit> any_zero(const RnsValue& v) {
    std::vector<ZeroDigit> out;
    for (std::size_t i = 0; i < v.format().power_count(); ++i) {
        if (v.valid(i)) {
            if (auto k = divisible_powers(v, i); k > 0) {
                out.push_back({i, k});
            }
        }
    }
    return out;
}

BigInt effective_range(const RnsValue& v) {
    BigInt r = 1;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v.valid(i)) {
            r *= v.current_modulus(i);
        }
    }
    return r;
}

bool is_zero(const RnsValue& v) noexcept {
    for (const auto& d : v.digits()) {
        if (d.valid() && d.value != 0) {
            return false;
        }
    }
    return true;
}

bool is_one(const RnsValue& v) noexcept {
    for (const auto& d : v.digits()) {
        if (d.valid() && d.value != 1) {
            return false;
        }
    }
    return v.any_valid();
}

} // namespace rnsdiv
