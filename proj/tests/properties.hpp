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

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace rnsdiv::props {

struct PropertyResult {
    std::string name;
    std::size_t random_cases = 0;
    std::size_t exhaustive_cases = 0;
    std::size_t failures = 0;
    std::string first_failure;

    bool ok() const noexcept { return failures == 0; }
    std::string summary() const;
};

inline constexpr std::size_t kRandomCases = 1000;

PropertyResult round_trip(std::uint64_t seed);
PropertyResult pac_homomorphism(std::uint64_t seed);
PropertyResult scaling_laws(std::uint64_t seed);
PropertyResult mrc_reconstruction(std::uint64_t seed);
PropertyResult base_extension(std::uint64_t seed);
PropertyResult compare_order(std::uint64_t seed);

struct NamedProperty {
    const char* name;
    std::function<PropertyResult(std::uint64_t)> run;
};

const std::vector<NamedProperty>& all_properties();

} // namespace rnsdiv::props
