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

#include <sstream>

namespace rnsdiv {

namespace {

constexpr std::size_t kSize = 27;

// Transcribed as printed, errata included. Row = divisor, column = target,
// 0 = UND.
constexpr std::uint32_t kPrinted[kSize][kSize] = {
    /*  11 */ 0, 0, 1, 16, 91, 6, 123, 2, 5, 5, 59, 221, 1, 3, 3, 3, 3, 35, 35, 163, 14, 184, 2, 9, 156, 7, 197,
    /* 121 */ 0, 0, 1, 6, 31, 10, 88, 1, 7, 25, 79, 241, 1, 1, 1, 9, 9, 9, 73, 201, 9, 43, 4, 32, 326, 11, 182,
    /*   5 */ 9, 97, 0, 0, 0, 8, 34, 2, 2, 11, 65, 146, 1, 1, 5, 13, 13, 13, 77, 205, 7, 58, 3, 10, 206, 4, 289,
    /*  25 */ 4, 92, 0, 0, 0, 12, 142, 1, 4, 13, 13, 175, 1, 1, 1, 9, 9, 9, 41, 41, 15, 185, 2, 2, 247, 16, 130,
    /* 125 */ 3, 91, 0, 0, 0, 5, 96, 2, 8, 8, 35, 35, 1, 1, 5, 5, 21, 21, 85, 213, 3, 37, 6, 20, 118, 7, 26,
    /*  13 */ 6, 28, 2, 2, 77, 0, 0, 1, 7, 25, 25, 187, 1, 1, 5, 5, 5, 5, 69, 197, 4, 89, 6, 34, 132, 3, 250,
    /* 169 */ 3, 58, 4, 4, 54, 0, 0, 1, 4, 4, 58, 220, 1, 1, 1, 9, 25, 25, 25, 153, 16, 118, 1, 29, 274, 9, 47,
    /*   3 */ 4, 81, 2, 17, 42, 9, 113, 0, 0, 0, 0, 0, 1, 3, 3, 11, 11, 43, 43, 171, 6, 193, 5, 33, 229, 13, 241,
    /*   9 */ 5, 27, 4, 14, 14, 3, 94, 0, 0, 0, 0, 0, 1, 1, 1, 9, 25, 57, 57, 57, 2, 257, 4, 11, 305, 17, 321,
    /*  27 */ 9, 9, 3, 13, 88, 1, 144, 0, 0, 0, 0, 0, 1, 3, 3, 3, 19, 19, 19, 19, 12, 182, 6, 20, 216, 12, 107,
    /*  81 */ 3, 3, 1, 21, 71, 9, 48, 0, 0, 0, 0, 0, 1, 1, 1, 1, 17, 49, 49, 177, 4, 157, 2, 23, 72, 4, 156,
    /* 243 */ 1, 1, 2, 7, 107, 3, 16, 0, 0, 0, 0, 0, 1, 3, 3, 11, 27, 59, 59, 59, 7, 245, 3, 24, 24, 14, 52,
    /*   2 */ 6, 61, 3, 13, 63, 7, 85, 2, 5, 14, 41, 122, 0, 0, 0, 0, 0, 0, 0, 0, 13, 217, 2, 37, 86, 5, 271,
    /*   4 */ 3, 91, 4, 19, 94, 10, 127, 1, 7, 7, 61, 61, 0, 0, 0, 0, 0, 0, 0, 0, 13, 217, 2, 37, 86, 5, 271,
    /*   8 */ 7, 106, 2, 22, 47, 5, 148, 2, 8, 17, 71, 152, 0, 0, 0, 0, 0, 0, 0, 0, 15, 253, 1, 43, 43, 12, 316,
    /*  16 */ 9, 53, 1, 11, 86, 9, 74, 1, 4, 22, 76, 76, 0, 0, 0, 0, 0, 0, 0, 0, 16, 271, 4, 46, 193, 6, 158,
    /*  32 */ 10, 87, 3, 18, 43, 11, 37, 2, 2, 11, 38, 38, 0, 0, 0, 0, 0, 0, 0, 0, 8, 280, 2, 23, 268, 3, 79,
    /*  64 */ 5, 104, 4, 9, 84, 12, 103, 1, 1, 19, 19, 19, 0, 0, 0, 0, 0, 0, 0, 0, 4, 140, 1, 36, 134, 11, 220,
    /* 128 */ 8, 52, 2, 17, 42, 6, 136, 2, 5, 23, 50, 131, 0, 0, 0, 0, 0, 0, 0, 0, 2, 70, 4, 18, 67, 15, 110,
    /* 256 */ 4, 26, 1, 21, 21, 3, 68, 1, 7, 25, 25, 187, 0, 0, 0, 0, 0, 0, 0, 0, 1, 35, 2, 9, 205, 17, 55,
    /*  17 */ 2, 57, 3, 3, 103, 10, 10, 2, 8, 8, 62, 143, 1, 1, 1, 1, 17, 49, 113, 241, 0, 0, 5, 26, 222, 9, 85,
    /* 289 */ 4, 103, 4, 9, 109, 9, 100, 1, 1, 10, 37, 37, 1, 1, 1, 1, 1, 33, 97, 225, 0, 0, 4, 39, 235, 5, 5,
    /*   7 */ 8, 52, 3, 18, 18, 2, 145, 1, 4, 4, 58, 139, 1, 3, 7, 7, 23, 55, 55, 183, 5, 124, 0, 0, 0, 11, 258,
    /*  49 */ 9, 42, 4, 24, 74, 4, 69, 1, 7, 16, 43, 124, 1, 1, 1, 1, 17, 17, 81, 209, 8, 59, 0, 0, 0, 7, 140,
    /* 343 */ 6, 6, 2, 7, 82, 8, 34, 1, 1, 10, 64, 226, 1, 3, 7, 7, 7, 39, 103, 103, 6, 91, 0, 0, 0, 1, 20,
    /*  19 */ 7, 51, 4, 4, 79, 11, 89, 1, 1, 10, 64, 64, 1, 3, 3, 11, 27, 27, 27, 27, 9, 213, 3, 31, 325, 0, 0,
    /* 361 */ 5, 60, 1, 16, 116, 4, 147, 1, 1, 19, 46, 208, 1, 1, 1, 9, 25, 25, 89, 217, 13, 285, 2, 30, 324, 0, 0,
};

struct Place {
    std::size_t digit;
    std::uint32_t power;
};

std::optional<Place> locate(const RnsFormat& fmt, std::uint32_t modulus) {
    for (std::size_t i = 0; i < fmt.size(); ++i) {
        for (std::uint32_t p = 1; p <= fmt[i].max_power; ++p) {
            if (fmt[i].modulus_at(p) == modulus) {
                return Place{i, p};
            }
        }
    }
    return std::nullopt;
}

std::string cell_text(const std::optional<std::uint32_t>& v) { return v ? std::to_string(*v) : "UND"; }

} // namespace

const std::vector<std::uint32_t>& printed_inverse_moduli() {
    static const std::vector<std::uint32_t> m = {11, 121, 5,  25, 125, 13,  169, 3,   9,  27, 81, 243, 2,  4,
                                                 8,  16,  32, 64, 128, 256, 17,  289, 7, 49, 343, 19, 361};
    return m;
}

const std::vector<PrintedInverseCell>& printed_inverse_fixture() {
    static const std::vector<PrintedInverseCell> cells = [] {
        const auto& m = printed_inverse_moduli();
        std::vector<PrintedInverseCell> out;
        out.reserve(kSize * kSize);
        for (std::size_t r = 0; r < kSize; ++r) {
            for (std::size_t c = 0; c < kSize; ++c) {
                const auto v = kPrinted[r][c];
                out.push_back({m[r], m[c], v ? std::optional<std::uint32_t>(v) : std::nullopt});
            }
        }
        return out;
    }();
    return cells;
}

std::string PrintedInverseReport::to_text() const {
    std::ostringstream out;
    out << "generated entries " << generated_entries << ", definitional failures " << definitional_failures
        << "\nprinted cells " << fixture_cells << ", matched " << matched_cells << ", errata "
        << fixture_errata.size() << ", mismatches " << mismatches.size() << ", presence errors "
        << presence_errors.size() << '\n';
    auto list = [&](const char* title, const std::vector<InverseIssue>& v) {
        for (const auto& i : v) {
            out << "  " << title << ": 1/" << i.divisor << " mod " << i.target << " printed " << cell_text(i.printed)
                << ", generated " << cell_text(i.generated) << '\n';
        }
    };
    list("erratum", fixture_errata);
    list("mismatch", mismatches);
    list("presence", presence_errors);
    return out.str();
}

PrintedInverseReport verify_printed_inverses(const InverseTable& tbl) {
    const auto& fmt = tbl.format();
    PrintedInverseReport rep;
    for (const auto& e : tbl.entries()) {
        ++rep.generated_entries;
        const std::uint64_t a = fmt[e.divisor_digit].modulus_at(e.k);
        const std::uint64_t m = fmt[e.target_digit].modulus_at(e.p);
        if (a * e.inverse % m != 1 % m) {
            ++rep.definitional_failures;
        }
    }
    for (const auto& cell : printed_inverse_fixture()) {
        ++rep.fixture_cells;
        const auto d = locate(fmt, cell.divisor);
        const auto t = locate(fmt, cell.target);
        std::optional<std::uint32_t> gen;
        if (d && t) {
            gen = tbl.find(d->digit, d->power, t->digit, t->power);
        }
        const InverseIssue issue{cell.divisor, cell.target, cell.inverse, gen};
        if (!cell.inverse || !gen) {
            if (cell.inverse.has_value() != gen.has_value()) {
                rep.presence_errors.push_back(issue);
            } else {
                ++rep.matched_cells;
            }
            continue;
        }
        if (std::uint64_t{cell.divisor} * *cell.inverse % cell.target != 1) {
            rep.fixture_errata.push_back(issue);
        } else if (*cell.inverse != *gen) {
            rep.mismatches.push_back(issue);
        } else {
            ++rep.matched_cells;
        }
    }
    return rep;
}

std::string render_inverse_table(const InverseTable& tbl) {
    const auto& fmt = tbl.format();
    std::vector<Place> order;
    std::vector<std::uint32_t> labels;
    for (std::size_t i = 0; i < fmt.power_count(); ++i) {
        for (std::uint32_t p = 1; p <= fmt[i].max_power; ++p) {
            order.push_back({i, p});
            labels.push_back(fmt[i].modulus_at(p));
        }
    }
    std::ostringstream out;
    out << "1/row mod col";
    for (auto l : labels) {
        out << '\t' << l;
    }
    out << '\n';
    for (std::size_t r = 0; r < order.size(); ++r) {
        out << labels[r];
        for (const auto& c : order) {
            out << '\t' << cell_text(tbl.find(order[r].digit, order[r].power, c.digit, c.power));
        }
        out << '\n';
    }
    return out.str();
}

} // namespace rnsdiv
