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

#include <cassert>
#include <cstdint>

namespace rnsdiv {

std::uint32_t mod_inverse(std::uint64_t a, std::uint64_t m) {
    if (m < 2) {
        throw RnsError(Errc::NoInverse, "modulus must be at least 2");
    }
    std::int64_t r0 = static_cast<std::int64_t>(m);
    std::int64_t r1 = static_cast<std::int64_t>(a % m);
    std::int64_t t0 = 0;
    std::int64_t t1 = 1;
    while (r1 != 0) {
        const std::int64_t q = r0 / r1;
        std::int64_t r2 = r0 - q * r1;
        r0 = r1;
        r1 = r2;
        std::int64_t t2 = t0 - q * t1;
        t0 = t1;
        t1 = t2;
    }
    if (r0 != 1) {
        throw RnsError(Errc::NoInverse,
                       std::to_string(a) + " has no inverse modulo " + std::to_string(m));
    }
    if (t0 < 0) {
        t0 += static_cast<std::int64_t>(m);
    }
    return static_cast<std::uint32_t>(t0);
}

std::uint32_t divide_digit(std::uint32_t value, std::uint32_t base, std::uint32_t k) {
    const std::uint32_t d = ipow(base, k);
    if (value % d != 0) {
        throw RnsError(Errc::NotDivisible, std::to_string(value) + " is not divisible by " +
                                               std::to_string(base) + "^" + std::to_string(k));
    }
    return value / d;
}

InverseTable::InverseTable(FormatPtr fmt) : fmt_(std::move(fmt)) {
    const std::size_t n = fmt_->size();
    const std::size_t pmax = fmt_->max_power();
    stride_ = pmax;
    table_.assign(n * pmax * n * pmax, 0);
    for (std::size_t j = 0; j < n; ++j) {
        const auto& div = (*fmt_)[j];
        for (std::uint32_t k = 1; k <= div.max_power; ++k) {
            const std::uint64_t d = div.modulus_at(k);
            for (std::size_t i = 0; i < n; ++i) {
                if (i == j) {
                    continue;
                }
                const auto& tgt = (*fmt_)[i];
                for (std::uint32_t p = 1; p <= tgt.max_power; ++p) {
                    table_[slot(j, k, i, p)] = mod_inverse(d, tgt.modulus_at(p));
                    ++entries_;
                }
            }
        }
    }
}

std::size_t InverseTable::slot(std::size_t j, std::uint32_t k, std::size_t i, std::uint32_t p) const noexcept {
    const std::size_t n = fmt_->size();
    return ((j * stride_ + (k - 1)) * n + i) * stride_ + (p - 1);
}

std::optional<std::uint32_t> InverseTable::find(std::size_t j, std::uint32_t k, std::size_t i,
                                                std::uint32_t p) const noexcept {
    const std::size_t n = fmt_->size();
    if (j >= n || i >= n || k < 1 || p < 1 || k > (*fmt_).specs()[j].max_power ||
        p > (*fmt_).specs()[i].max_power) {
        return std::nullopt;
    }
    const std::uint32_t v = table_[slot(j, k, i, p)];
    if (v == 0) {
        return std::nullopt;
    }
    return v;
}

std::uint32_t InverseTable::inverse(std::size_t j, std::uint32_t k, std::size_t i, std::uint32_t p) const {
    if (auto v = find(j, k, i, p)) {
        return *v;
    }
    throw RnsError(Errc::NoInverse, "no table entry for digit " + std::to_string(j + 1) + "^" +
                                        std::to_string(k) + " against digit " + std::to_string(i + 1) +
                                        "^" + std::to_string(p));
}

std::vector<InverseTable::Entry> InverseTable::entries() const {
    std::vector<Entry> out;
    out.reserve(entries_);
    for (std::size_t j = 0; j < fmt_->size(); ++j) {
        for (std::uint32_t k = 1; k <= (*fmt_)[j].max_power; ++k) {
            for (std::size_t i = 0; i < fmt_->size(); ++i) {
                for (std::uint32_t p = 1; p <= (*fmt_)[i].max_power; ++p) {
                    if (auto v = find(j, k, i, p)) {
                        out.push_back({j, k, i, p, *v});
                    }
                }
            }
        }
    }
    return out;
}

InverseTable build_inverse_table(FormatPtr fmt) { return InverseTable(std::move(fmt)); }

} // namespace rnsdiv
