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
#include <rnsdiv/trace.hpp>

namespace rnsdiv {

void Trace::enter(std::string_view state) {
    if (state != state_) {
        state_ = std::string(state);
        ++counters_.transitions;
    }
}

void Trace::push(TraceRow row) {
    if (record_rows_) {
        rows_.push_back(std::move(row));
    }
}

void Trace::value_row(std::string_view reg, std::string_view action, const RnsValue& v, std::string note) {
    if (!record_rows_) {
        return;
    }
    std::vector<std::optional<std::uint32_t>> cells;
    cells.reserve(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        cells.push_back(v.valid(i) ? std::optional<std::uint32_t>(v.value(i)) : std::nullopt);
    }
    cells_row(reg, action, std::move(cells), v, std::move(note));
}

void Trace::cells_row(std::string_view reg, std::string_view action,
                      std::vector<std::optional<std::uint32_t>> cells, const RnsValue& pattern,
                      std::string note) {
    if (!record_rows_) {
        return;
    }
    TraceRow row;
    row.step = step_ < 0 ? 0 : step_;
    row.state = state_;
    row.reg = std::string(reg);
    row.action = std::string(action);
    row.digits = std::move(cells);
    row.moduli.reserve(pattern.size());
    for (std::size_t i = 0; i < pattern.size(); ++i) {
        row.moduli.push_back(pattern.current_modulus(i));
    }
    row.note = std::move(note);
    rows_.push_back(std::move(row));
}

RnsValue row_value(const TraceRow& row, const FormatPtr& fmt) {
    if (row.digits.size() != fmt->size() || row.moduli.size() != fmt->size()) {
        throw RnsError(Errc::InvalidSpec, "trace row width does not match the format");
    }
    std::vector<DigitState> digits(fmt->size());
    for (std::size_t i = 0; i < fmt->size(); ++i) {
        const auto& s = (*fmt)[i];
        std::uint32_t power = 0;
        for (std::uint32_t p = 0; p <= s.max_power; ++p) {
            if (s.modulus_at(p) == row.moduli[i]) {
                power = p;
                break;
            }
            if (p == s.max_power) {
                throw RnsError(Errc::InvalidSpec, "modulus " + std::to_string(row.moduli[i]) +
                                                      " is not a power of base " + std::to_string(s.base));
            }
        }
        if (!row.digits[i]) {
            power = 0;
        }
        digits[i] = {row.digits[i].value_or(0), power};
    }
    return RnsValue(fmt, std::move(digits));
}

std::string format_cells(const std::vector<std::optional<std::uint32_t>>& cells) {
    std::string out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i > 0) {
            out += ' ';
        }
        out += cells[i] ? std::to_string(*cells[i]) : std::string("*");
    }
    return out;
}

} // namespace rnsdiv
