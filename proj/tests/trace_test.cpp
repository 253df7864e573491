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

std::vector<TraceRow> sample_rows() {
    const auto fmt = mod9_power_format();
    const InverseTable tbl(fmt);
    Trace t;
    const std::vector<ScaleFactor> f = {{1, 3}, {3, 1}, {4, 4}};
    multi_factor_scale(encode(6000, fmt), f, tbl, &t);
    return t.rows();
}

} // namespace

TEST(TraceEmit, EmptyTraceIsHeaderOnly) {
    const std::string md = emit_trace({}, TraceFormat::Markdown);
    EXPECT_EQ(md, "| Step | State | Register | Action | Notes |\n|---|---|---|---|---|\n");
    EXPECT_EQ(emit_trace({}, TraceFormat::Csv), "step,state,register,action,note\n");
    EXPECT_EQ(emit_trace({}, TraceFormat::Json), "[]\n");
}

TEST(TraceEmit, MarkdownRepeatsModulusRowOnChange) {
    const std::string md = emit_trace(sample_rows(), TraceFormat::Markdown);
    EXPECT_NE(md.find("| Digit modulus | 121 | 125 | 169 | 243 | 256 | 289 | 343 | 361 |"), std::string::npos);
    EXPECT_NE(md.find("| Digit modulus | 121 | 1 | 169 | 81 | 256 | 289 | 343 | 361 |"), std::string::npos) << md;
    EXPECT_NE(md.find("| Digit modulus | 121 | 1 | 169 | 81 | 16 | 289 | 343 | 361 |"), std::string::npos);
}

TEST(TraceEmit, JsonRoundTrip) {
    const auto rows = sample_rows();
    const std::string js = emit_trace(rows, TraceFormat::Json);
    EXPECT_NE(js.find("\"register\""), std::string::npos);
    EXPECT_NE(js.find("null"), std::string::npos);
    EXPECT_EQ(parse_trace_json(js), rows);
}

TEST(TraceEmit, JsonParseErrors) {
    for (const char* bad : {"{", "{}", "[{\"step\":1}]",
                            R"([{"step":0,"state":"","register":"","action":"","digits":[1],"moduli":[],"note":""}])"}) {
        try {
            parse_trace_json(bad);
            ADD_FAILURE() << bad;
        } catch (const RnsError& e) {
            EXPECT_EQ(e.code(), Errc::Parse);
        }
    }
}

TEST(TraceEmit, CsvQuotesFields) {
    TraceRow r;
    r.step = 3;
    r.reg = "NUMER";
    r.action = "Subtract 1, then \"scale\"";
    r.digits = {5, std::nullopt};
    r.moduli = {8, 1};
    r.note = "plain";
    const std::string csv = emit_trace({r}, TraceFormat::Csv);
    EXPECT_EQ(csv, "step,state,register,action,d_1,d_2,m_1,m_2,note\n"
                   "3,,NUMER,\"Subtract 1, then \"\"scale\"\"\",5,*,8,1,plain\n");
}

TEST(TraceEmit, Deterministic) {
    EXPECT_EQ(emit_trace(sample_rows(), TraceFormat::Markdown), emit_trace(sample_rows(), TraceFormat::Markdown));
}

TEST(TraceEmit, FormatNames) {
    EXPECT_EQ(parse_trace_format("md"), TraceFormat::Markdown);
    EXPECT_EQ(parse_trace_format("json"), TraceFormat::Json);
    EXPECT_FALSE(parse_trace_format("xml"));
}

TEST(TraceRows, RowValueRebuildsRegister) {
    const auto fmt = mod9_power_format();
    const auto rows = sample_rows();
    const auto v = row_value(rows[4], fmt);
    EXPECT_EQ(decode(v), 16);
    EXPECT_EQ(v.current_modulus(3), 81u);
    EXPECT_FALSE(v.valid(1));
    EXPECT_THROW(row_value(rows[4], toy_format()), RnsError);
}

TEST(TraceRows, CountersSurviveWithoutRows) {
    const auto fmt = mod9_power_format();
    const InverseTable tbl(fmt);
    Trace t(false);
    const std::vector<ScaleFactor> f = {{1, 3}, {3, 1}};
    multi_factor_scale(encode(6000, fmt), f, tbl, &t);
    EXPECT_TRUE(t.rows().empty());
    EXPECT_EQ(t.counters().scales, 2u);
    EXPECT_EQ(format_cells({1, std::nullopt, 3}), "1 * 3");
}
