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
#include <rnsdiv/decomposition.hpp>
#include <rnsdiv/division.hpp>
#include <rnsdiv/golden.hpp>
#include <rnsdiv/mixed_radix.hpp>
#include <rnsdiv/scaling.hpp>

#include <array>
#include <sstream>

namespace rnsdiv {

namespace {

// -1 stands for an invalid ('*') cell.
struct GoldenRow {
    const char* reg;
    std::array<int, 8> cells;
};

constexpr GoldenRow kScaling[] = {
    {"x", {71, 0, 85, 168, 112, 220, 169, 224}},
    {"", {91, -1, 96, 35, 213, 37, 118, 26}},
    {"x", {48, -1, 48, 48, 48, 48, 48, 48}},
    {"", {81, -1, 113, -1, 171, 193, 229, 241}},
    {"x", {16, -1, 16, 16, 16, 16, 16, 16}},
    {"", {53, -1, 74, 76, -1, 271, 193, 158}},
    {"x", {1, -1, 1, 1, 1, 1, 1, 1}},
};

constexpr GoldenRow kMrc[] = {
    {"x", {36, 81, 86, 12, 64, 53, 319, 355}},
    {"x", {0, 45, 50, 219, 28, 17, 283, 319}},
    {"x", {-1, 20, 6, 48, 252, 153, 334, 298}},
    {"x", {-1, 0, 155, 28, 232, 133, 314, 278}},
    {"x", {-1, -1, 8, 8, 8, 8, 8, 8}},
    {"x", {-1, -1, 0, 0, 0, 0, 0, 0}},
    {"x", {-1, -1, 0, 0, 0, 0, 0, 0}},
};

// Only the first four digits are laid out in the worked example.
constexpr std::array<int, 4> kExtension[] = {
    {-1, 81, 86, 12}, {-1, 0, 5, 174}, {-1, -1, 142, 15}, {-1, -1, 0, 116},
    {-1, -1, -1, 5},  {-1, -1, -1, 0}, {-1, -1, -1, 0},
};

constexpr GoldenRow kDecomposition[] = {
    {"x", {36, 81, 86, 12, 64, 53, 319, 355}},
    {"", {81, 42, 113, -1, 171, 193, 229, 241}},
    {"x", {12, 27, 85, 4, 192, 114, 335, 359}},
    {"", {104, 84, 103, 19, -1, 140, 134, 220}},
    {"x", {38, 18, 136, 76, 3, 65, 300, 282}},
    {"x", {39, 19, 137, 77, 4, 66, 301, 283}},
    {"", {91, 94, 127, 61, -1, 217, 86, 271}},
    {"x", {40, 36, 161, 80, -1, 161, 161, 161}},
    {"", {52, 18, 145, 58, -1, 124, -1, 258}},
    {"x", {23, 23, 23, 23, -1, 23, 23, 23}},
    {"x", {23, 23, 23, 23, 23, 23, 23, 23}},
    {"x", {24, 24, 24, 24, 24, 24, 24, 24}},
    {"", {81, 42, 113, -1, 171, 193, 229, 241}},
    {"x", {8, 8, 8, 8, 8, 8, 8, 8}},
    {"", {106, 47, 148, 71, -1, 253, 43, 316}},
    {"x", {1, 1, 1, 1, 1, 1, 1, 1}},
};

// The printed 644 row shows d_5 = 4 while 644 mod 4 = 0.
struct CellErratum {
    std::size_t row;
    std::size_t col;
    int printed;
    int corrected;
};
constexpr CellErratum kDecompositionErrata[] = {{5, 4, 4, 0}};

constexpr GoldenRow kDivision[] = {
    {"NUMER", {49, 71, 69, 18, 177, 0, 227, 197}}, // 0
    {"DENOM", {67, 68, 138, 103, 255, 92, 40, 274}},
    {"DENOM", {68, 69, 139, 104, 0, 93, 41, 275}}, // 1
    {"NUMER", {114, 19, 61, 84, 0, 112, 50, 20}}, // 2
    {"", {26, 21, 68, 187, -1, 35, 205, 55}}, // 3
    {"NUMER", {60, 24, 92, 156, -1, 163, 303, 17}},
    {"DENOM", {74, 74, 157, 8, -1, 76, 173, 324}},
    {"NUMER", {60, 24, 92, 156, 104, 163, 303, 17}}, // 4
    {"DENOM", {74, 74, 157, 8, 137, 76, 173, 324}},
    {"DENOM", {75, 75, 158, 9, 138, 77, 174, 325}}, // 5
    {"NUMER", {36, 0, 68, 132, 80, 139, 279, 354}}, // 6
    {"", {92, -1, 142, 175, 41, 185, 247, 130}}, // 7
    {"NUMER", {45, 0, 23, 15, 208, 283, 313, 173}},
    {"DENOM", {3, 3, 128, 117, 26, 84, 103, 13}},
    {"NUMER", {39, 4, 17, 9, 202, 277, 307, 167}}, // 8
    {"", {27, 4, 94, -1, 57, 257, 305, 321}}, // 9
    {"NUMER", {85, 1, 77, 1, 250, 95, 339, 179}},
    {"DENOM", {81, 2, 33, 13, 202, 202, 202, 202}},
    {"NUMER", {85, 1, 77, 1, 250, 95, 339, 179}}, // 10
    {"", {61, 3, 85, 14, -1, 145, 172, 181}}, // 11
    {"NUMER", {103, 3, 123, 14, 125, 192, 341, 270}},
    {"DENOM", {101, 1, 101, 20, 101, 101, 101, 101}},
    {"NUMER", {101, 1, 121, 12, 123, 190, 339, 268}}, // 12
    {"", {81, 2, 113, -1, 43, 193, 229, 241}}, // 13
    {"NUMER", {74, 2, 153, 4, 41, 256, 113, 330}},
    {"DENOM", {34, 4, 34, 7, 34, 34, 34, 34}},
    {"NUMER", {73, 1, 152, 3, 40, 255, 112, 329}}, // 14
    {"", {61, 3, 85, 5, -1, 145, 172, 181}}, // 15
    {"NUMER", {97, 3, 76, 6, 20, 272, 56, 345}},
    {"DENOM", {17, 2, 17, 17, 17, 17, 17, 17}},
    {"NUMER", {97, 3, 76, 6, 20, 272, 56, 345}}, // 16
    {"", {57, 3, 10, 8, 49, -1, 222, 85}}, // 17
    {"NUMER", {84, 4, 84, 3, 20, 16, 84, 84}},
    {"DENOM", {1, 1, 1, 1, 1, 1, 1, 1}},
    {"NUMER", {84, 84, 84, 84, 84, 84, 84, 84}}, // 18
    {"ACCUM", {84, 84, 84, 84, 84, 84, 84, 84}}, // 19
    {"NUMER", {108, 109, 138, 114, 5, 75, 297, 285}}, // 20
    {"NUMER", {103, 104, 133, 109, 0, 70, 292, 280}}, // 21
    {"NUMER", {16, 59, 87, 214, -1, 138, 178, 238}},
    {"NUMER", {16, 59, 87, 214, 117, 138, 178, 238}}, // 22
    {"NUMER", {7, 50, 78, 205, 108, 129, 169, 229}}, // 23
    {"NUMER", {39, 2, 91, 154, 76, 167, 240, 168}},
    {"NUMER", {38, 1, 90, 153, 75, 166, 239, 167}}, // 24
    {"NUMER", {58, 4, 10, 17, 179, 179, 179, 179}},
    {"NUMER", {57, 3, 9, 16, 178, 178, 178, 178}}, // 25
    {"NUMER", {89, 4, 89, 8, 89, 89, 89, 89}},
    {"NUMER", {87, 2, 87, 6, 87, 87, 87, 87}}, // 26
    {"NUMER", {29, 4, 29, 2, 29, 29, 29, 29}},
    {"NUMER", {28, 3, 28, 1, 28, 28, 28, 28}}, // 27
    {"NUMER", {14, 4, 14, 5, 14, 14, 14, 14}},
    {"NUMER", {0, 0, 0, 0, 0, 0, 0, 0}}, // 28
    {"NUMER", {0, 0, 0, 0, 0, 0, 0, 0}},
    {"OLD NUMER", {108, 109, 138, 114, 5, 75, 297, 285}}, // 29
    {"DENOM", {67, 68, 138, 103, 255, 92, 40, 274}},
    {"REM", {108, 109, 138, 114, 5, 75, 297, 285}}, // 30
    {"QUOTIENT", {84, 84, 84, 84, 84, 84, 84, 84}}, // 31
};
constexpr std::size_t kDivisionSecondPart = 36;

// DENOM = 17 printed with d_4 = 17, but M_4 is 9 at that point: 17 mod 9 = 8.
constexpr CellErratum kDivisionErrata[] = {{29, 3, 17, 8}};

std::string show(const std::array<int, 8>& c) {
    std::string s;
    for (int v : c) {
        s += (s.empty() ? "" : " ") + (v < 0 ? std::string("*") : std::to_string(v));
    }
    return s;
}

std::array<int, 8> prefix(const TraceRow& r) {
    std::array<int, 8> c{};
    for (std::size_t i = 0; i < 8; ++i) {
        c[i] = i < r.digits.size() && r.digits[i] ? static_cast<int>(*r.digits[i]) : -1;
    }
    return c;
}

// Rows must appear in order and match exactly, one for one.
bool exact_rows(const std::vector<TraceRow>& rows, std::span<const GoldenRow> want, std::string& why) {
    if (rows.size() < want.size()) {
        why = "trace has " + std::to_string(rows.size()) + " rows, expected " + std::to_string(want.size());
        return false;
    }
    for (std::size_t k = 0; k < want.size(); ++k) {
        if (rows[k].reg != want[k].reg || prefix(rows[k]) != want[k].cells) {
            why = "row " + std::to_string(k) + ": got " + rows[k].reg + " [" + show(prefix(rows[k])) +
                  "], expected " + want[k].reg + " [" + show(want[k].cells) + "]";
            return false;
        }
    }
    return true;
}

// Expected rows must appear in order; the trace may hold extra rows between
// them (the worked tables leave some out).
bool ordered_rows(const std::vector<TraceRow>& rows, std::span<const GoldenRow> want, std::size_t& extra,
                  std::string& why) {
    std::size_t r = 0;
    extra = 0;
    for (std::size_t k = 0; k < want.size(); ++k) {
        while (r < rows.size() && (rows[r].reg != want[k].reg || prefix(rows[r]) != want[k].cells)) {
            ++r;
            ++extra;
        }
        if (r == rows.size()) {
            why = "expected row " + std::to_string(k) + " (" + want[k].reg + " [" + show(want[k].cells) +
                  "]) not found in order";
            return false;
        }
        ++r;
    }
    return true;
}

SelftestCheck make(std::string name, bool ok, std::string detail) {
    return {std::move(name), ok, std::move(detail)};
}

} // namespace

bool SelftestReport::ok() const noexcept {
    for (const auto& c : checks) {
        if (!c.passed) {
            return false;
        }
    }
    return !checks.empty();
}

std::string SelftestReport::to_text() const {
    std::ostringstream out;
    for (const auto& c : checks) {
        out << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
    }
    return out.str();
}

SelftestCheck check_scaling_golden() {
    const auto fmt = mod9_power_format();
    const InverseTable tbl(fmt);
    Trace tr;
    const std::vector<ScaleFactor> factors = {{1, 3}, {3, 1}, {4, 4}};
    const RnsValue out = multi_factor_scale(encode(6000, fmt), factors, tbl, &tr);
    std::string why;
    if (!exact_rows(tr.rows(), kScaling, why)) {
        return make("scaling 6000 by 125, 3, 16", false, why);
    }
    const bool moduli = out.current_modulus(3) == 81 && out.current_modulus(4) == 16 && !out.valid(1);
    return make("scaling 6000 by 125, 3, 16", moduli && decode(out) == 1,
                moduli ? "7 rows match; M_4=81, M_5=16, result 1" : "final moduli differ");
}

SelftestCheck check_mrc_golden() {
    const auto fmt = mod9_power_format();
    const InverseTable tbl(fmt);
    Trace tr;
    const auto digits = mrc_digits(encode(123456, fmt), tbl, &tr);
    std::string why;
    if (!exact_rows(tr.rows(), kMrc, why)) {
        return make("mixed-radix 123456", false, why);
    }
    const bool ok = digits.size() == 3 && digits[0].a == 36 && digits[1].a == 20 && digits[2].a == 8 &&
                    mrc_value(digits) == 123456;
    return make("mixed-radix 123456", ok, ok ? "a = 36, 20, 8" : "mixed-radix digits differ");
}

SelftestCheck check_base_extension_golden() {
    const auto fmt = mod9_power_format();
    const InverseTable tbl(fmt);
    RnsValue v = encode(123456, fmt);
    v.set(0, 0, 0);
    Trace tr;
    const auto ext = base_extend_detailed(v, tbl, &tr);
    const auto& rows = tr.rows();
    constexpr std::size_t n = sizeof(kExtension) / sizeof(kExtension[0]);
    if (rows.size() < n) {
        return make("base extension of d_1", false, "too few rows");
    }
    for (std::size_t k = 0; k < n; ++k) {
        const auto c = prefix(rows[k]);
        for (std::size_t i = 0; i < 4; ++i) {
            if (c[i] != kExtension[k][i]) {
                return make("base extension of d_1", false, "row " + std::to_string(k) + " differs: " + show(c));
            }
        }
    }
    const auto& rec = ext.recombination;
    const bool ok = rec.targets() == std::vector<std::size_t>{0} &&
                    rec.weight_history(0) == std::vector<std::uint32_t>{1, 4, 71} &&
                    rec.partial_history(0) == std::vector<std::uint32_t>{81, 44, 36} && ext.value.value(0) == 36 &&
                    ext.value == encode(123456, fmt);
    return make("base extension of d_1", ok,
                ok ? "weights 1, 4, 71; partials 81, 44, 36; d_1 = 36" : "recombination differs");
}

SelftestCheck check_decomposition_golden() {
    const auto fmt = mod9_power_format();
    const InverseTable tbl(fmt);
    Trace tr;
    const FactorScript script = decompose(encode(123456, fmt), tbl, &tr);
    std::vector<GoldenRow> want(std::begin(kDecomposition), std::end(kDecomposition));
    for (const auto& e : kDecompositionErrata) {
        want[e.row].cells[e.col] = e.corrected;
    }
    std::string why;
    if (!exact_rows(tr.rows(), want, why)) {
        return make("decomposition of 123456", false, why);
    }
    const std::vector<std::uint32_t> factors = {3, 64, 4, 7, 3, 8};
    const bool ok = script.factors() == factors && script.y_hat == 129024 && script.increments == 2;
    return make("decomposition of 123456", ok,
                ok ? "factors 3 64 4 7 3 8, y_hat 129024, 2 increments; 1 printed cell corrected (644 mod 4 = 0)"
                   : "factors or y_hat differ");
}

SelftestCheck check_division_golden() {
    const std::string name = "division 987654321 / 11634943";
    const auto fmt = mod9_default_format();
    const InverseTable tbl(fmt);
    const RnsValue x = encode(987654321, fmt);
    const RnsValue y = encode(11634943, fmt);
    DivisionOptions live;
    live.mode = DivisionMode::Live;
    live.record_trace = true;
    const auto r = divide(x, y, tbl, live);
    std::vector<GoldenRow> want(std::begin(kDivision), std::end(kDivision));
    for (const auto& e : kDivisionErrata) {
        want[e.row].cells[e.col] = e.corrected;
    }
    std::size_t extra = 0;
    std::string why;
    if (!ordered_rows(r.trace.rows(), want, extra, why)) {
        return make(name, false, "live: " + why);
    }
    DivisionOptions replay;
    replay.record_trace = true;
    const auto rr = divide(x, y, tbl, replay);
    std::size_t extra_replay = 0;
    const std::span<const GoldenRow> tail(want.begin() + kDivisionSecondPart, want.end());
    if (!ordered_rows(rr.trace.rows(), tail, extra_replay, why)) {
        return make(name, false, "replay: " + why);
    }
    const bool ok = decode(r.quotient) == 84 && decode(r.remainder) == 10319109 && r.iterations == 2 &&
                    r.corrections == 0 && decode(rr.quotient) == 84 && decode(rr.remainder) == 10319109;
    return make(name, ok,
                ok ? "quotient 84, remainder 10319109; " + std::to_string(std::size(kDivision)) +
                         " printed rows found in order (" + std::to_string(extra) +
                         " extra trace rows); 1 printed cell corrected (17 mod 9 = 8)"
                   : "result differs");
}

SelftestCheck check_printed_inverses() {
    const InverseTable tbl(mod9_power_format());
    const auto rep = verify_printed_inverses(tbl);
    // The eight printed cells that fail a * inv = 1: 1/25 mod 64, and the
    // last seven cells of the row for 2, which repeat the row for 4.
    const std::vector<std::pair<std::uint32_t, std::uint32_t>> known = {
        {25, 64}, {2, 17}, {2, 289}, {2, 7}, {2, 49}, {2, 343}, {2, 19}, {2, 361}};
    std::vector<std::pair<std::uint32_t, std::uint32_t>> got;
    for (const auto& e : rep.fixture_errata) {
        got.emplace_back(e.divisor, e.target);
    }
    const bool ok = rep.ok() && got == known && rep.matched_cells + known.size() == rep.fixture_cells;
    std::string detail = std::to_string(rep.generated_entries) + " entries verified, " +
                         std::to_string(rep.matched_cells) + "/" + std::to_string(rep.fixture_cells) +
                         " printed cells match, " + std::to_string(got.size()) + " printed errata";
    if (!ok) {
        detail += "\n" + rep.to_text();
    }
    return make("inverse table", ok, detail);
}

SelftestReport run_selftest() {
    SelftestReport rep;
    for (auto* check : {check_scaling_golden, check_mrc_golden, check_base_extension_golden,
                        check_decomposition_golden, check_division_golden, check_printed_inverses}) {
        try {
            rep.checks.push_back(check());
        } catch (const std::exception& e) {
            rep.checks.push_back({"golden check", false, std::string("threw: ") + e.what()});
        }
    }
    return rep;
}

} // namespace rnsdiv
