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
#include <rnsdiv/scaling.hpp>

namespace rnsdiv {

namespace {

void require_table(const RnsValue& v, const InverseTable& tbl) {
    if (!(v.format_ptr() == tbl.format_ptr() || v.format() == tbl.format())) {
        throw RnsError(Errc::FormatMismatch, "inverse table was built for a different format");
    }
}

} // namespace

std::vector<std::optional<std::uint32_t>> inverse_cells(const RnsValue& v, std::size_t i, std::uint32_t k,
                                                        const InverseTable& tbl) {
    std::vector<std::optional<std::uint32_t>> cells(v.size());
    for (std::size_t j = 0; j < v.size(); ++j) {
        if (j != i && v.valid(j)) {
            cells[j] = tbl.inverse(i, k, j, v.power(j));
        }
    }
    return cells;
}

RnsValue scale_by_power(const RnsValue& v, std::size_t i, std::uint32_t k, const InverseTable& tbl,
                        Trace* trace) {
    require_table(v, tbl);
    if (i >= v.size() || !v.valid(i)) {
        throw RnsError(Errc::DigitInvalid, "cannot scale by invalid digit " + std::to_string(i + 1));
    }
    if (k == 0 || k > v.power(i)) {
        throw RnsError(Errc::PowerExceeded, "digit " + std::to_string(i + 1) + " has " +
                                                std::to_string(v.power(i)) + " powers, asked for " +
                                                std::to_string(k));
    }
    const auto& spec = v.format()[i];
    RnsValue out = v;
    out.set(i, divide_digit(v.value(i), spec.base, k), v.power(i) - k);
    for (std::size_t j = 0; j < v.size(); ++j) {
        if (j == i || !v.valid(j)) {
            continue;
        }
        const std::uint64_t inv = tbl.inverse(i, k, j, v.power(j));
        out.set(j, static_cast<std::uint32_t>(v.value(j) * inv % v.current_modulus(j)), v.power(j));
    }

    if (trace) {
        ++trace->counters().scales;
        if (trace->recording()) {
            const std::uint32_t factor = spec.modulus_at(k);
            const std::string f = std::to_string(factor);
            trace->next_step();
            trace->cells_row("", "Multiplicative inverses for " + f, inverse_cells(v, i, k, tbl), v,
                             "x is divisible by " + f);
            trace->next_step();
            std::string note = decode(v).str() + "/" + f + "=" + decode(out).str();
            if (out.valid(i)) {
                note += "; M_" + std::to_string(i + 1) + "=" + std::to_string(out.current_modulus(i));
            } else {
                note += "; d_" + std::to_string(i + 1) + " invalidated";
            }
            trace->value_row("x", "Multiply by 1/" + f, out, std::move(note));
        }
    }
    return out;
}

RnsValue multi_factor_scale(const RnsValue& v, std::span<const ScaleFactor> factors, const InverseTable& tbl,
                            Trace* trace) {
    if (trace && trace->recording()) {
        trace->next_step();
        trace->value_row("x", "Starting value", v, "x=" + decode(v).str());
    }
    RnsValue cur = v;
    for (std::size_t s = 0; s < factors.size(); ++s) {
        try {
            cur = scale_by_power(cur, factors[s].digit, factors[s].k, tbl, trace);
        } catch (const RnsError& e) {
            throw StepError(e, s);
        }
    }
    return cur;
}

std::uint32_t offset_for(const RnsValue& v, std::size_t i, std::uint32_t k) {
    if (i >= v.size() || !v.valid(i)) {
        throw RnsError(Errc::DigitInvalid, "digit " + std::to_string(i + 1) + " is invalid");
    }
    if (k > v.power(i)) {
        throw RnsError(Errc::PowerExceeded, "offset asked for more powers than digit " +
                                                std::to_string(i + 1) + " holds");
    }
    return v.value(i) % v.format()[i].modulus_at(k);
}

std::optional<ScaleFactor> factor_for(const RnsFormat& fmt, std::uint64_t factor) {
    for (std::size_t i = 0; i < fmt.power_count(); ++i) {
        const auto& s = fmt[i];
        for (std::uint32_t k = 1; k <= s.max_power; ++k) {
            if (s.modulus_at(k) == factor) {
                return ScaleFactor{i, k};
            }
        }
    }
    return std::nullopt;
}

} // namespace rnsdiv
