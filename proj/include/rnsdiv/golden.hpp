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

#include <string>
#include <vector>

namespace rnsdiv {

struct SelftestCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct SelftestReport {
    std::vector<SelftestCheck> checks;

    bool ok() const noexcept;
    std::string to_text() const;
};

/// Replays the worked examples (multi-factor scaling, mixed-radix
/// conversion, base extension, divisor decomposition, the 987654321 /
/// 11634943 division) cell by cell and verifies the MOD-9 inverse table.
SelftestReport run_selftest();

// Individual golden checks, also used by the acceptance suite.
SelftestCheck check_scaling_golden();
SelftestCheck check_mrc_golden();
SelftestCheck check_base_extension_golden();
SelftestCheck check_decomposition_golden();
SelftestCheck check_division_golden();
SelftestCheck check_printed_inverses();

} // namespace rnsdiv
