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

#include <rnsdiv/printed_inverses.hpp>
#include <rnsdiv/errors.hpp>
#include <rnsdiv/inverse_table.hpp>

#include <gtest/gtest.h>

using namespace rnsdiv;

TEST(ModInverse, Basics) {
    EXPECT_EQ(mod_inverse(125, 121), 91u);
    EXPECT_EQ(mod_inverse(3, 121), 81u);
    EXPECT_EQ(mod_inverse(16, 121), 53u);
    EXPECT_EQ(mod_inverse(125 + 121, 121), mod_inverse(125, 121));
    EXPECT_THROW(mod_inverse(11, 121), RnsError);
    EXPECT_THROW(mod_inverse(0, 7), RnsError);
}

TEST(DivideDigit, ExactOnly) {
    EXPECT_EQ(divide_digit(192, 2, 6), 3u);
    try {
        divide_digit(193, 2, 1);
        FAIL();
    } catch (const RnsError& e) {
        EXPECT_EQ(e.code(), Errc::NotDivisible);
    }
}

TEST(InverseTable, PrintedCells) {
    const InverseTable tbl(mod9_default_format());
    // 17 wrt 343, 243 wrt 256, 25 wrt 125 (absent: same base).
    EXPECT_EQ(tbl.inverse(5, 1, 6, 3), 222u);
    EXPECT_EQ(tbl.inverse(3, 5, 4, 8), 59u);
    EXPECT_FALSE(tbl.find(1, 2, 1, 3));
    EXPECT_FALSE(tbl.find(0, 1, 0, 2));
    // Reduced targets: 1/2 mod 27 and 1/3 mod 128.
    EXPECT_EQ(tbl.inverse(4, 1, 3, 3), 14u);
    EXPECT_EQ(tbl.inverse(3, 1, 4, 7), 43u);
}

TEST(InverseTable, PlainDigitsAsDivisors) {
    const auto fmt = mod9_default_format();
    const InverseTable tbl(fmt);
    const auto inv = tbl.find(8, 1, 0, 2);
    ASSERT_TRUE(inv);
    EXPECT_EQ(457u * *inv % 121, 1u);
}

TEST(InverseTable, EveryEntryIsAnInverse) {
    for (const auto& fmt : {mod9_default_format(), toy_format()}) {
        const InverseTable tbl(fmt);
        std::size_t n = 0;
        for (const auto& e : tbl.entries()) {
            const std::uint64_t a = (*fmt)[e.divisor_digit].modulus_at(e.k);
            const std::uint64_t m = (*fmt)[e.target_digit].modulus_at(e.p);
            EXPECT_EQ(a * e.inverse % m, 1 % m);
            EXPECT_NE(e.divisor_digit, e.target_digit);
            ++n;
        }
        EXPECT_EQ(n, tbl.entry_count());
    }
}

TEST(InverseTable, MissingEntryThrows) {
    const InverseTable tbl(toy_format());
    try {
        tbl.inverse(1, 1, 1, 1);
        FAIL();
    } catch (const RnsError& e) {
        EXPECT_EQ(e.code(), Errc::NoInverse);
    }
}

TEST(PrintedInverses, FixtureSelfValidates) {
    const auto rep = verify_printed_inverses(InverseTable(mod9_power_format()));
    EXPECT_EQ(rep.definitional_failures, 0u);
    EXPECT_TRUE(rep.mismatches.empty());
    EXPECT_TRUE(rep.presence_errors.empty());
    EXPECT_EQ(rep.fixture_cells, 27u * 27u);
    ASSERT_EQ(rep.fixture_errata.size(), 8u);
    // The definitional value replaces each erratum: 25 * 41 = 1 mod 64.
    EXPECT_EQ(rep.fixture_errata[0].divisor, 25u);
    EXPECT_EQ(rep.fixture_errata[0].target, 64u);
    EXPECT_EQ(rep.fixture_errata[0].printed, 9u);
    EXPECT_EQ(rep.fixture_errata[0].generated, 41u);
    EXPECT_TRUE(rep.ok());
}

TEST(PrintedInverses, Rendering) {
    const std::string s = render_inverse_table(InverseTable(mod9_power_format()));
    EXPECT_NE(s.find("UND"), std::string::npos);
    // Row for 17: the inverse wrt 343 is 222.
    EXPECT_NE(s.find("\n17\t"), std::string::npos);
}
