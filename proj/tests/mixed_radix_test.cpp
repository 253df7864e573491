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
#include <rnsdiv/mixed_radix.hpp>

#include <gtest/gtest.h>

using namespace rnsdiv;

class MixedRadix : public ::testing::Test {
protected:
    FormatPtr fmt = mod9_power_format();
    InverseTable tbl{fmt};
};

TEST_F(MixedRadix, StopsAtZero) {
    Trace t;
    const auto d = mrc_digits(encode(123456, fmt), tbl, &t);
    ASSERT_EQ(d.size(), 3u);
    EXPECT_EQ(d[0], (MixedRadixDigit{0, 121, 36}));
    EXPECT_EQ(d[1], (MixedRadixDigit{1, 125, 20}));
    EXPECT_EQ(d[2], (MixedRadixDigit{2, 169, 8}));
    EXPECT_EQ(mrc_value(d), 123456);
    ASSERT_EQ(t.rows().size(), 7u);
    EXPECT_EQ(t.rows().back().action, "Zero detected");
    EXPECT_EQ(t.counters().mrc_digits, 3u);
}

TEST_F(MixedRadix, ZeroHasNoDigits) {
    EXPECT_TRUE(mrc_digits(encode(0, fmt), tbl).empty());
    EXPECT_EQ(mrc_value({}), 0);
}

TEST_F(MixedRadix, SkipsInvalidDigitsInModulusOrder) {
    RnsValue v = encode(123456, fmt);
    v.set(0, 0, 0);
    const auto d = mrc_digits(v, tbl);
    ASSERT_EQ(d.size(), 3u);
    EXPECT_EQ(d[0].a, 81u);
    EXPECT_EQ(d[1].a, 142u);
    EXPECT_EQ(d[2].a, 5u);
}

TEST_F(MixedRadix, BaseExtendRecoversOneDigit) {
    RnsValue v = encode(123456, fmt);
    v.set(0, 0, 0);
    const auto ext = base_extend_detailed(v, tbl);
    EXPECT_EQ(ext.value, encode(123456, fmt));
    EXPECT_EQ(ext.recombination.weight_history(0), (std::vector<std::uint32_t>{1, 4, 71}));
    EXPECT_EQ(ext.recombination.partial_history(0), (std::vector<std::uint32_t>{81, 44, 36}));
}

TEST_F(MixedRadix, BaseExtendRestoresReducedDigits) {
    // 45449 after dividing by 256: digit 5 invalid, the others full.
    RnsValue v = encode(45449, fmt);
    v.set(4, 0, 0);
    v.set(3, 45449 % 27, 3);
    const auto out = base_extend(v, tbl);
    EXPECT_TRUE(out.normalized());
    EXPECT_EQ(out.value(4), 137u);
    EXPECT_EQ(decode(out), 45449);
}

TEST_F(MixedRadix, BaseExtendOfNormalizedIsIdentity) {
    const auto v = encode(987654321, fmt);
    const auto ext = base_extend_detailed(v, tbl);
    EXPECT_EQ(ext.value, v);
    EXPECT_TRUE(ext.digits.empty());
}

TEST_F(MixedRadix, BaseExtendNeedsAValidDigit) {
    RnsValue v = encode(0, fmt);
    for (std::size_t i = 0; i < v.size(); ++i) {
        v.set(i, 0, 0);
    }
    try {
        base_extend(v, tbl);
        FAIL();
    } catch (const RnsError& e) {
        EXPECT_EQ(e.code(), Errc::RangeInsufficient);
    }
}

TEST_F(MixedRadix, Compare) {
    const auto a = encode(11634943, fmt);
    const auto b = encode(10319109, fmt);
    EXPECT_EQ(compare(a, b, tbl), std::strong_ordering::greater);
    EXPECT_EQ(compare(b, a, tbl), std::strong_ordering::less);
    EXPECT_EQ(compare(a, a, tbl), std::strong_ordering::equal);
    EXPECT_EQ(compare(encode(0, fmt), encode(1, fmt), tbl), std::strong_ordering::less);
    EXPECT_EQ(compare(encode(fmt->range() - 1, fmt), encode(fmt->range() - 2, fmt), tbl),
              std::strong_ordering::greater);
}

TEST_F(MixedRadix, CompareRejectsMismatchedPatterns) {
    RnsValue a = encode(3, fmt);
    a.set(0, 3, 1);
    EXPECT_THROW(compare(a, encode(3, fmt), tbl), RnsError);
}
