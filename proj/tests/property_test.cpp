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

#include "properties.hpp"

#include <gtest/gtest.h>

using namespace rnsdiv::props;

namespace {

constexpr std::uint64_t kSeed = 20260101;

void expect_clean(const PropertyResult& r) {
    EXPECT_GE(r.random_cases, kRandomCases);
    EXPECT_EQ(r.failures, 0u) << r.summary();
}

} // namespace

TEST(Properties, RoundTrip) { expect_clean(round_trip(kSeed)); }
TEST(Properties, PacHomomorphism) { expect_clean(pac_homomorphism(kSeed)); }
TEST(Properties, ScalingLaws) { expect_clean(scaling_laws(kSeed)); }
TEST(Properties, MrcReconstruction) { expect_clean(mrc_reconstruction(kSeed)); }
TEST(Properties, BaseExtension) { expect_clean(base_extension(kSeed)); }
TEST(Properties, CompareOrder) { expect_clean(compare_order(kSeed)); }

TEST(Properties, ToyIsExhaustive) {
    EXPECT_EQ(round_trip(1).exhaustive_cases, 360u);
    EXPECT_EQ(pac_homomorphism(1).exhaustive_cases, 360u * 360u);
    EXPECT_EQ(compare_order(1).exhaustive_cases, 360u * 360u);
}
