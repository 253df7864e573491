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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rnsdiv {

/// One cell of the printed MOD-9 inverse table: inverse of `divisor` modulo
/// `target`, or nullopt for an UND cell.
struct PrintedInverseCell {
    std::uint32_t divisor;
    std::uint32_t target;
    std::optional<std::uint32_t> inverse;
};

/// Rows and columns of the MOD-9 inverse table, in table order.
const std::vector<std::uint32_t>& printed_inverse_moduli();

/// The transcribed 27 x 27 table, row-major.
const std::vector<PrintedInverseCell>& printed_inverse_fixture();

struct InverseIssue {
    std::uint32_t divisor;
    std::uint32_t target;
    std::optional<std::uint32_t> printed;
    std::optional<std::uint32_t> generated;
};

struct PrintedInverseReport {
    std::size_t generated_entries = 0;
    std::size_t definitional_failures = 0;
    std::size_t fixture_cells = 0;
    std::size_t matched_cells = 0;
    /// Printed cells that fail (a * inv) mod m = 1; the definition wins.
    std::vector<InverseIssue> fixture_errata;
    /// Printed cells that pass the definition yet differ from the table.
    std::vector<InverseIssue> mismatches;
    /// UND cells that the generated table nonetheless holds, or defined cells
    /// it lacks.
    std::vector<InverseIssue> presence_errors;

    bool ok() const noexcept {
        return definitional_failures == 0 && mismatches.empty() && presence_errors.empty();
    }
    std::string to_text() const;
};

/// Checks every generated entry definitionally, then against the fixture.
/// Expects a table over a format containing the MOD-9 power digits.
PrintedInverseReport verify_printed_inverses(const InverseTable& tbl);

/// Table of the power-based inverses in the printed row/column layout.
std::string render_inverse_table(const InverseTable& tbl);

} // namespace rnsdiv
