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
#include <rnsdiv/oracle.hpp>
#include <rnsdiv/trace_emit.hpp>

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>
#include <thread>

namespace rnsdiv {

DivMod oracle_divmod(const BigInt& x, const BigInt& y) {
    if (y == 0) {
        throw RnsError(Errc::DivideByZero, "division by zero");
    }
    BigInt q;
    BigInt r;
    boost::multiprecision::divide_qr(x, y, q, r);
    return {q, r};
}

namespace {

// Uniform in [0, bound) by rejection on the bit length of bound.
BigInt uniform_below(std::mt19937_64& rng, const BigInt& bound) {
    const unsigned bits = boost::multiprecision::msb(bound) + 1;
    while (true) {
        BigInt v = 0;
        for (unsigned got = 0; got < bits; got += 64) {
            v <<= 64;
            v |= rng();
        }
        v >>= ((bits + 63) / 64) * 64 - bits;
        if (v < bound) {
            return v;
        }
    }
}

// Value with a random bit length in [1, msb(bound)], so small and large
// magnitudes are equally likely.
BigInt log_uniform_below(std::mt19937_64& rng, const BigInt& bound) {
    const unsigned top = boost::multiprecision::msb(bound);
    const unsigned bits = std::uniform_int_distribution<unsigned>(1, std::max(1u, top))(rng);
    BigInt cap = BigInt(1) << bits;
    return uniform_below(rng, std::min(cap, bound));
}

BigInt nonzero_below(std::mt19937_64& rng, const BigInt& bound) {
    BigInt v = log_uniform_below(rng, bound);
    return v == 0 ? BigInt(1) : v;
}

const char* const kStrata[] = {"random",    "random",    "random",      "small_y", "exact_multiple", "x_lt_y",
                               "y_one",     "y_two",     "y_r_minus_1", "x_zero",  "x_eq_y",         "y_prod_minus_1",
                               "x_r_minus_1"};

std::string mode_name(DivisionMode m) { return m == DivisionMode::Live ? "live" : "replay"; }

std::optional<FuzzFailure> run_case(const InverseTable& tbl, const FuzzCase& c, DivisionMode mode,
                                    const std::optional<std::filesystem::path>& trace_dir) {
    const auto& fmt = tbl.format_ptr();
    const DivMod expected = oracle_divmod(c.x, c.y);
    FuzzFailure f{c.index, c.stratum, c.x, c.y, expected, std::nullopt, {}, {}};
    DivisionOptions opts;
    opts.mode = mode;
    try {
        const auto r = divide(encode(c.x, fmt), encode(c.y, fmt), tbl, opts);
        DivMod got{decode(r.quotient), decode(r.remainder)};
        if (got == expected) {
            return std::nullopt;
        }
        f.got = got;
        f.error = "mismatch";
    } catch (const std::exception& e) {
        f.error = e.what();
    }
    if (trace_dir) {
        opts.record_trace = true;
        std::string rows_json;
        try {
            rows_json = emit_trace(divide(encode(c.x, fmt), encode(c.y, fmt), tbl, opts).trace.rows(),
                                   TraceFormat::Json);
        } catch (const std::exception& e) {
            rows_json = nlohmann::json({{"error", e.what()}}).dump() + "\n";
        }
        std::filesystem::create_directories(*trace_dir);
        const auto path = *trace_dir / ("case_" + std::to_string(c.index) + ".json");
        std::ofstream(path) << rows_json;
        f.trace_path = path.string();
    }
    return f;
}

// Runs fn(i) for i in [0, n) over `jobs` threads with interleaved indices.
template <class Fn>
void parallel_for(std::size_t n, unsigned jobs, Fn fn) {
    jobs = std::max(1u, jobs);
    if (jobs == 1) {
        for (std::size_t i = 0; i < n; ++i) {
            fn(i);
        }
        return;
    }
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j) {
        pool.emplace_back([&, j] {
            for (std::size_t i = j; i < n; i += jobs) {
                fn(i);
            }
        });
    }
}

} // namespace

std::vector<FuzzCase> fuzz_cases(const RnsFormat& fmt, std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const BigInt& R = fmt.range();
    std::vector<FuzzCase> out;
    out.reserve(count);
    constexpr std::size_t strata = sizeof(kStrata) / sizeof(kStrata[0]);
    for (std::size_t i = 0; i < count; ++i) {
        const std::string s = kStrata[i % strata];
        BigInt x;
        BigInt y;
        if (s == "random") {
            x = uniform_below(rng, R);
            y = x > 1 ? nonzero_below(rng, x + 1) : BigInt(1);
        } else if (s == "small_y") {
            x = uniform_below(rng, R);
            const std::uint64_t cap = R > 1001 ? 1000 : to_u64(R - 1);
            y = std::uniform_int_distribution<std::uint64_t>(1, cap)(rng);
        } else if (s == "exact_multiple") {
            y = nonzero_below(rng, R);
            const BigInt qmax = (R - 1) / y + 1;
            x = uniform_below(rng, qmax) * y;
        } else if (s == "x_lt_y") {
            y = nonzero_below(rng, R);
            x = uniform_below(rng, y);
        } else if (s == "y_one") {
            x = uniform_below(rng, R);
            y = 1;
        } else if (s == "y_two") {
            x = uniform_below(rng, R);
            y = R > 2 ? BigInt(2) : BigInt(1);
        } else if (s == "y_r_minus_1") {
            x = (rng() & 1) ? R - 1 : uniform_below(rng, R);
            y = R - 1;
        } else if (s == "x_zero") {
            x = 0;
            y = nonzero_below(rng, R);
        } else if (s == "x_eq_y") {
            y = nonzero_below(rng, R);
            x = y;
        } else if (s == "y_prod_minus_1") {
            // A product of full digit moduli, less one: the increment-heavy case.
            BigInt p = 1;
            for (std::size_t d = 0; d < fmt.size(); ++d) {
                if ((rng() & 1) && p * fmt[d].modulus < R) {
                    p *= fmt[d].modulus;
                }
            }
            y = p > 2 ? p - 1 : BigInt(fmt[0].modulus - 1);
            x = uniform_below(rng, R);
        } else {
            x = R - 1;
            y = nonzero_below(rng, R);
        }
        out.push_back({i, std::move(x), std::move(y), s});
    }
    return out;
}

std::string FuzzReport::to_text() const {
    std::ostringstream out;
    out << label << ": " << cases << " cases, " << failures.size() << " failures\n";
    for (const auto& f : failures) {
        out << "  case " << f.index << " [" << f.stratum << "] X=" << f.x << " Y=" << f.y << " expected q="
            << f.expected.quotient << " r=" << f.expected.remainder;
        if (f.got) {
            out << " got q=" << f.got->quotient << " r=" << f.got->remainder;
        }
        out << " (" << f.error << ")";
        if (!f.trace_path.empty()) {
            out << " trace " << f.trace_path;
        }
        out << '\n';
    }
    return out.str();
}

nlohmann::json FuzzReport::to_json() const {
    nlohmann::json fails = nlohmann::json::array();
    for (const auto& f : failures) {
        nlohmann::json o{{"index", f.index},
                         {"stratum", f.stratum},
                         {"x", f.x.str()},
                         {"y", f.y.str()},
                         {"expected", {{"quotient", f.expected.quotient.str()}, {"remainder", f.expected.remainder.str()}}},
                         {"error", f.error}};
        o["got"] = f.got ? nlohmann::json{{"quotient", f.got->quotient.str()}, {"remainder", f.got->remainder.str()}}
                         : nlohmann::json(nullptr);
        if (!f.trace_path.empty()) {
            o["trace"] = f.trace_path;
        }
        fails.push_back(std::move(o));
    }
    return {{"label", label}, {"cases", cases}, {"failures", std::move(fails)}, {"ok", ok()}};
}

FuzzReport fuzz_divisions(const InverseTable& tbl, const FuzzOptions& options) {
    const auto cases = fuzz_cases(tbl.format(), options.count, options.seed);
    std::vector<std::optional<FuzzFailure>> slots(cases.size());
    parallel_for(cases.size(), options.jobs,
                 [&](std::size_t i) { slots[i] = run_case(tbl, cases[i], options.mode, options.trace_dir); });
    FuzzReport rep;
    rep.label = "fuzz seed " + std::to_string(options.seed) + " mode " + mode_name(options.mode);
    rep.cases = cases.size();
    for (auto& s : slots) {
        if (s) {
            rep.failures.push_back(std::move(*s));
        }
    }
    return rep;
}

FuzzReport exhaustive_divisions(const InverseTable& tbl, unsigned jobs) {
    const auto& fmt = tbl.format_ptr();
    if (fmt->range() > (1u << 20)) {
        throw RnsError(Errc::InvalidSpec, "range too large for an exhaustive sweep");
    }
    const std::uint64_t R = to_u64(fmt->range());
    std::vector<RnsValue> enc;
    enc.reserve(R);
    for (std::uint64_t v = 0; v < R; ++v) {
        enc.push_back(encode(v, fmt));
    }
    // One slot per divisor keeps the merge order independent of scheduling.
    std::vector<std::vector<FuzzFailure>> per_y(R);
    parallel_for(R - 1, jobs, [&](std::size_t k) {
        const std::uint64_t y = k + 1;
        for (std::uint64_t x = 0; x < R; ++x) {
            const DivMod expected{x / y, x % y};
            FuzzFailure f{x * R + y, "exhaustive", x, y, expected, std::nullopt, {}, {}};
            try {
                const auto r = divide(enc[x], enc[y], tbl);
                DivMod got{decode(r.quotient), decode(r.remainder)};
                if (got == expected) {
                    continue;
                }
                f.got = got;
                f.error = "mismatch";
            } catch (const std::exception& e) {
                f.error = e.what();
            }
            per_y[k].push_back(std::move(f));
        }
    });
    FuzzReport rep;
    rep.label = "exhaustive R=" + std::to_string(R);
    rep.cases = R * (R - 1);
    for (auto& v : per_y) {
        for (auto& f : v) {
            rep.failures.push_back(std::move(f));
        }
    }
    std::sort(rep.failures.begin(), rep.failures.end(),
              [](const FuzzFailure& a, const FuzzFailure& b) { return a.index < b.index; });
    return rep;
}

} // namespace rnsdiv
