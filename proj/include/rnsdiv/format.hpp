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

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace rnsdiv {

bool is_prime(std::uint64_t n) noexcept;

/// base^exp for small operands; the caller guarantees the result fits.
std::uint32_t ipow(std::uint32_t base, std::uint32_t exp) noexcept;

/// One digit modulus M = base^max_power.
struct ModulusSpec {
    std::uint32_t base = 2;
    std::uint32_t max_power = 1;
    std::uint32_t modulus = 2;
    bool power_based = true;

    /// base^power; 1 when power is zero.
    std::uint32_t modulus_at(std::uint32_t power) const noexcept { return ipow(base, power); }

    friend bool operator==(const ModulusSpec&, const ModulusSpec&) = default;
};

/// Requested power-based digit, as given to make_format.
struct PowerSpec {
    std::uint32_t base;
    std::uint32_t power;
};

/// An RNS machine word: power-based digits ascending by modulus, followed by
/// plain prime digits ascending. Immutable; share through FormatPtr.
class RnsFormat {
public:
    const std::vector<ModulusSpec>& specs() const noexcept { return specs_; }
    const ModulusSpec& operator[](std::size_t i) const { return specs_.at(i); }
    std::size_t size() const noexcept { return specs_.size(); }
    std::uint32_t digit_width() const noexcept { return digit_width_; }
    std::size_t power_count() const noexcept { return power_count_; }
    bool is_power_digit(std::size_t i) const noexcept { return i < power_count_; }

    /// Index of the base-2 digit. Always present in a valid format.
    std::size_t base_two_index() const noexcept { return base_two_; }
    std::optional<std::size_t> index_of_base(std::uint32_t base) const noexcept;
    std::uint32_t max_power() const noexcept { return max_power_; }

    /// R, the product of all full moduli.
    const BigInt& range() const noexcept { return range_; }

    friend bool operator==(const RnsFormat& a, const RnsFormat& b) {
        return a.digit_width_ == b.digit_width_ && a.specs_ == b.specs_;
    }

private:
    friend std::shared_ptr<const RnsFormat> make_format(const std::vector<PowerSpec>&,
                                                        const std::vector<std::uint32_t>&,
                                                        std::uint32_t);
    RnsFormat() = default;

    std::vector<ModulusSpec> specs_;
    std::uint32_t digit_width_ = 0;
    std::size_t power_count_ = 0;
    std::size_t base_two_ = 0;
    std::uint32_t max_power_ = 1;
    BigInt range_;
};

using FormatPtr = std::shared_ptr<const RnsFormat>;

/// Validates and builds a format. Throws RnsError with NotPrime,
/// DuplicateBase, WidthOverflow (some M_i > 2^digit_width), MissingBaseTwo or
/// InvalidSpec.
FormatPtr make_format(const std::vector<PowerSpec>& power_specs,
                      const std::vector<std::uint32_t>& plain_primes,
                      std::uint32_t digit_width);

/// The 18-digit, 9-bit MOD-9 word: 121, 125, 169, 243, 256, 289, 343, 361
/// followed by the primes 457 ... 509.
FormatPtr mod9_default_format();

/// The eight power-based MOD-9 digits alone (the worked-example tables).
FormatPtr mod9_power_format();

/// (2^3, 3^2, 5): range 360, small enough for exhaustive testing.
FormatPtr toy_format();

double log2_range(const RnsFormat& fmt);

/// log2(R) / (n * N) * 100.
double format_efficiency(const RnsFormat& fmt);

std::string describe(const RnsFormat& fmt);

} // namespace rnsdiv
