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

#include <rnsdiv/format.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace rnsdiv {

/// Inverse of a modulo m via extended Euclid. Throws RnsError(NoInverse) when
/// gcd(a, m) != 1 or a = 0 mod m.
std::uint32_t mod_inverse(std::uint64_t a, std::uint64_t m);

/// value / base^k for an exactly divisible digit. Throws NotDivisible.
std::uint32_t divide_digit(std::uint32_t value, std::uint32_t base, std::uint32_t k);

/// All |1/(m_j^k)|_{m_i^p} for a format: every power of every digit's base as
/// divisor, against every power of every other digit as target. Plain digits
/// appear with their single power. Entries with j == i do not exist.
class InverseTable {
public:
    explicit InverseTable(FormatPtr fmt);

    const RnsFormat& format() const noexcept { return *fmt_; }
    const FormatPtr& format_ptr() const noexcept { return fmt_; }

    /// Inverse of base_j^k modulo base_i^p. A missing entry is a program error
    /// and throws RnsError(NoInverse).
    std::uint32_t inverse(std::size_t divisor_digit, std::uint32_t k, std::size_t target_digit,
                          std::uint32_t p) const;

    std::optional<std::uint32_t> find(std::size_t divisor_digit, std::uint32_t k,
                                      std::size_t target_digit, std::uint32_t p) const noexcept;

    std::size_t entry_count() const noexcept { return entries_; }

    struct Entry {
        std::size_t divisor_digit;
        std::uint32_t k;
        std::size_t target_digit;
        std::uint32_t p;
        std::uint32_t inverse;
    };

    std::vector<Entry> entries() const;

private:
    std::size_t slot(std::size_t j, std::uint32_t k, std::size_t i, std::uint32_t p) const noexcept;

    FormatPtr fmt_;
    std::size_t stride_ = 0;
    std::size_t entries_ = 0;
    std::vector<std::uint32_t> table_;
};

InverseTable build_inverse_table(FormatPtr fmt);

} // namespace rnsdiv
