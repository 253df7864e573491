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
#include <rnsdiv/format.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace rnsdiv {

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) {
        return false;
    }
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

std::uint32_t ipow(std::uint32_t base, std::uint32_t exp) noexcept {
    std::uint32_t out = 1;
    while (exp-- > 0) {
        out *= base;
    }
    return out;
}

std::optional<std::size_t> RnsFormat::index_of_base(std::uint32_t base) const noexcept {
    for (std::size_t i = 0; i < specs_.size(); ++i) {
        if (specs_[i].base == base) {
            return i;
        }
    }
    return std::nullopt;
}

FormatPtr make_format(const std::vector<PowerSpec>& power_specs,
                      const std::vector<std::uint32_t>& plain_primes, std::uint32_t digit_width) {
    // Digit values and their products must fit in 64-bit intermediates.
    if (digit_width < 1 || digit_width > 31) {
        throw RnsError(Errc::InvalidSpec, "digit width must be in [1, 31]");
    }
    if (power_specs.empty() && plain_primes.empty()) {
        throw RnsError(Errc::InvalidSpec, "format has no digits");
    }
    const std::uint64_t limit = std::uint64_t{1} << digit_width;

    auto check_base = [&](std::uint32_t base, std::uint32_t power) -> std::uint32_t {
        if (!is_prime(base)) {
            throw RnsError(Errc::NotPrime, std::to_string(base) + " is not prime");
        }
        if (power < 1) {
            throw RnsError(Errc::InvalidSpec, "power of base " + std::to_string(base) + " must be >= 1");
        }
        std::uint64_t m = 1;
        for (std::uint32_t p = 0; p < power; ++p) {
            m *= base;
            if (m > limit) {
                throw RnsError(Errc::WidthOverflow, std::to_string(base) + "^" + std::to_string(power) +
                                                        " does not fit in " + std::to_string(digit_width) +
                                                        " bits");
            }
        }
        return static_cast<std::uint32_t>(m);
    };

    std::vector<ModulusSpec> powers;
    for (const auto& ps : power_specs) {
        powers.push_back({ps.base, ps.power, check_base(ps.base, ps.power), true});
    }
    std::vector<ModulusSpec> plains;
    for (std::uint32_t prime : plain_primes) {
        plains.push_back({prime, 1, check_base(prime, 1), false});
    }
    auto by_modulus = [](const ModulusSpec& a, const ModulusSpec& b) { return a.modulus < b.modulus; };
    std::sort(powers.begin(), powers.end(), by_modulus);
    std::sort(plains.begin(), plains.end(), by_modulus);

    auto fmt = std::shared_ptr<RnsFormat>(new RnsFormat());
    fmt->specs_ = std::move(powers);
    fmt->power_count_ = fmt->specs_.size();
    fmt->specs_.insert(fmt->specs_.end(), plains.begin(), plains.end());
    fmt->digit_width_ = digit_width;

    for (std::size_t i = 0; i < fmt->specs_.size(); ++i) {
        for (std::size_t j = i + 1; j < fmt->specs_.size(); ++j) {
            if (fmt->specs_[i].base == fmt->specs_[j].base) {
                throw RnsError(Errc::DuplicateBase,
                               "base " + std::to_string(fmt->specs_[i].base) + " appears twice");
            }
        }
    }
    auto two = fmt->index_of_base(2);
    if (!two || !fmt->is_power_digit(*two)) {
        throw RnsError(Errc::MissingBaseTwo, "a power-based digit with base 2 is required");
    }
    fmt->base_two_ = *two;
    fmt->range_ = 1;
    for (const auto& s : fmt->specs_) {
        fmt->range_ *= s.modulus;
        fmt->max_power_ = std::max(fmt->max_power_, s.max_power);
    }
    return fmt;
}

FormatPtr mod9_default_format() {
    static const FormatPtr fmt =
        make_format({{11, 2}, {5, 3}, {13, 2}, {3, 5}, {2, 8}, {17, 2}, {7, 3}, {19, 2}},
                    {457, 461, 463, 467, 479, 487, 491, 499, 503, 509}, 9);
    return fmt;
}

FormatPtr mod9_power_format() {
    static const FormatPtr fmt =
        make_format({{11, 2}, {5, 3}, {13, 2}, {3, 5}, {2, 8}, {17, 2}, {7, 3}, {19, 2}}, {}, 9);
    return fmt;
}

FormatPtr toy_format() {
    static const FormatPtr fmt = make_format({{2, 3}, {3, 2}, {5, 1}}, {}, 4);
    return fmt;
}

double log2_range(const RnsFormat& fmt) {
    double bits = 0.0;
    for (const auto& s : fmt.specs()) {
        bits += std::log2(static_cast<double>(s.modulus));
    }
    return bits;
}

double format_efficiency(const RnsFormat& fmt) {
    return log2_range(fmt) / (static_cast<double>(fmt.digit_width()) * static_cast<double>(fmt.size())) *
           100.0;
}

std::string describe(const RnsFormat& fmt) {
    std::ostringstream out;
    out << "digit  modulus  base^power  kind\n";
    for (std::size_t i = 0; i < fmt.size(); ++i) {
        const auto& s = fmt[i];
        out << "M_" << (i + 1) << (i + 1 < 10 ? "    " : "   ") << s.modulus;
        for (std::size_t pad = std::to_string(s.modulus).size(); pad < 9; ++pad) {
            out << ' ';
        }
        std::string bp = std::to_string(s.base) + "^" + std::to_string(s.max_power);
        out << bp;
        for (std::size_t pad = bp.size(); pad < 12; ++pad) {
            out << ' ';
        }
        out << (s.power_based ? "power" : "plain") << '\n';
    }
    char buf[128];
    std::snprintf(buf, sizeof buf, "digits %zu, width %u bits\nlog2(R) = %.2f\nefficiency = %.2f%%\n",
                  fmt.size(), fmt.digit_width(), log2_range(fmt), format_efficiency(fmt));
    out << "R = " << fmt.range().str() << '\n' << buf;
    return out.str();
}

} // namespace rnsdiv
