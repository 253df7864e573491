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

#include <rnsdiv/value.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rnsdiv {

/// One row of a step trace, laid out like the worked-example tables: a step
/// number, FSM state, register, the action taken, one cell per digit
/// (nullopt prints as '*'), the current modulus of every digit and a note.
struct TraceRow {
    int step = 0;
    std::string state;
    std::string reg;
    std::string action;
    std::vector<std::optional<std::uint32_t>> digits;
    std::vector<std::uint32_t> moduli;
    std::string note;

    friend bool operator==(const TraceRow&, const TraceRow&) = default;
};

/// Work counted for the cycle estimator. Kept even when rows are not recorded.
struct CycleCounters {
    std::uint64_t mrc_digits = 0;
    std::uint64_t scales = 0;
    std::uint64_t increments = 0;
    std::uint64_t pac_ops = 0;
    std::uint64_t transitions = 0;

    friend bool operator==(const CycleCounters&, const CycleCounters&) = default;
};

class Trace {
public:
    explicit Trace(bool record_rows = true) : record_rows_(record_rows) {}

    bool recording() const noexcept { return record_rows_; }
    const std::vector<TraceRow>& rows() const noexcept { return rows_; }
    std::vector<TraceRow>& rows() noexcept { return rows_; }
    CycleCounters& counters() noexcept { return counters_; }
    const CycleCounters& counters() const noexcept { return counters_; }

    /// Starts a new logical step; following rows share its number.
    int next_step() noexcept { return ++step_; }
    int step() const noexcept { return step_; }

    /// Sets the state label used by subsequent rows. A change of label counts
    /// as one FSM transition.
    void enter(std::string_view state);
    const std::string& state() const noexcept { return state_; }

    /// Snapshot of a register value.
    void value_row(std::string_view reg, std::string_view action, const RnsValue& v,
                   std::string note = {});

    /// Row of arbitrary cells (inverse constants and the like) against the
    /// power pattern of `pattern`.
    void cells_row(std::string_view reg, std::string_view action,
                   std::vector<std::optional<std::uint32_t>> cells, const RnsValue& pattern,
                   std::string note = {});

    void push(TraceRow row);

private:
    bool record_rows_;
    int step_ = -1;
    std::string state_;
    std::vector<TraceRow> rows_;
    CycleCounters counters_;
};

/// Rebuilds the register value a row shows (cells with modulus 1 or '*' are
/// invalid). Throws RnsError(InvalidSpec) when the row does not fit the format.
RnsValue row_value(const TraceRow& row, const FormatPtr& fmt);

/// "Digits: 36 81 * 12" style rendering.
std::string format_cells(const std::vector<std::optional<std::uint32_t>>& cells);

} // namespace rnsdiv
