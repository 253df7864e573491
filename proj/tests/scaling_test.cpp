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
#include <rnsdiv/trace_emit.hpp>

#include <gtest/gtest.h>

using namespace rnsdiv;

namespace {

std::vector<std::optional<std::uint32_t>> row(std::initializer_list<int> v) {
    std::vector<std::optional<std::uint32_t>> out;
    for (int c : v) {
        out.push_back(c < 0 ? std::nullopt : std::optional<std::uint32_t>(c));
    }
    return out;
}

} // namespace

class Scaling : public ::testing::Test {
protected:
    FormatPtr fmt = mod9_power_format();
    InverseTable tbl{fmt};
};

TEST_F(Scaling, SixThousandDownToOne) {
    const std::vector<ScaleFactor> f = {{1, 3}, {3, 1}, {4, 4}};
    Trace t;
    const auto out = multi_factor_scale(encode(6000, fmt), f, tbl, &t);
    EXPECT_EQ(decode(out), 1);
    EXPECT_FALSE(out.valid(1));
    EXPECT_EQ(out.current_modulus(3), 81u);
    EXPECT_EQ(out.current_modulus(4), 16u);
    ASSERT_EQ(t.rows().size(), 7u);
    EXPECT_EQ(t.rows()[1].digits, row({91, -1, 96, 35, 213, 37, 118, 26}));
    EXPECT_EQ(t.rows()[2].digits, row({48, -1, 48, 48, 48, 48, 48, 48}));
    EXPECT_EQ(t.rows()[3].digits, row({81, -1, 113, -1, 171, 193, 229, 241}));
    EXPECT_EQ(t.rows()[5].digits, row({53, -1, 74, 76, -1, 271, 193, 158}));
    EXPECT_EQ(t.counters().scales, 3u);
}

TEST_F(Scaling, PartialPowerKeepsDigitValid) {
    const auto out = scale_by_power(encode(6000, fmt), 4, 4, tbl);
    EXPECT_EQ(decode(out), 375);
    EXPECT_EQ(out.power(4), 4u);
    EXPECT_EQ(out.value(4), 375u % 16);
}

TEST_F(Scaling, Errors) {
    auto code = [&](auto&& fn) {
        try {
            fn();
        } catch (const RnsError& e) {
            return e.code();
        }
        return Errc::Parse;
    };
    const auto x = encode(6000, fmt);
    EXPECT_EQ(code([&] { scale_by_power(x, 0, 1, tbl); }), Errc::NotDivisible);
    EXPECT_EQ(code([&] { scale_by_power(x, 1, 4, tbl); }), Errc::PowerExceeded);
    EXPECT_EQ(code([&] { scale_by_power(x, 1, 0, tbl); }), Errc::PowerExceeded);
    const auto y = scale_by_power(x, 1, 3, tbl);
    EXPECT_EQ(code([&] { scale_by_power(y, 1, 1, tbl); }), Errc::DigitInvalid);
    EXPECT_EQ(code([&] { scale_by_power(x, 1, 1, InverseTable(toy_format())); }), Errc::FormatMismatch);
}

TEST_F(Scaling, StepErrorNamesTheFailingStep) {
    const std::vector<ScaleFactor> f = {{1, 3}, {1, 1}};
    try {
        multi_factor_scale(encode(6000, fmt), f, tbl);
        FAIL();
    } catch (const StepError& e) {
        EXPECT_EQ(e.step(), 1u);
        EXPECT_EQ(e.code(), Errc::DigitInvalid);
    }
}

TEST_F(Scaling, OffsetAndFactorLookup) {
    EXPECT_EQ(offset_for(encode(987654321, fmt), 4, 8), 177u);
    EXPECT_EQ(factor_for(*fmt, 125), (ScaleFactor{1, 3}));
    EXPECT_EQ(factor_for(*fmt, 16), (ScaleFactor{4, 4}));
    EXPECT_FALSE(factor_for(*fmt, 6));
    EXPECT_FALSE(factor_for(*fmt, 1));
}

TEST_F(Scaling, MarkdownRowForFullModulusScale) {
    const std::vector<ScaleFactor> f = {{1, 3}};
    Trace t;
    multi_factor_scale(encode(6000, fmt), f, tbl, &t);
    const std::string md = emit_trace(t.rows(), TraceFormat::Markdown);
    EXPECT_NE(md.find("| Multiply by 1/125 | 48 | * | 48 | 48 | 48 | 48 | 48 | 48 |"), std::string::npos) << md;
}
