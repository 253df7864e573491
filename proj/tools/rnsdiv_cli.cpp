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

// rnsdiv: inspect formats, run traced RNS algorithms, self-test and fuzz.

#include <rnsdiv/printed_inverses.hpp>
#include <rnsdiv/config.hpp>
#include <rnsdiv/decomposition.hpp>
#include <rnsdiv/division.hpp>
#include <rnsdiv/errors.hpp>
#include <rnsdiv/golden.hpp>
#include <rnsdiv/mixed_radix.hpp>
#include <rnsdiv/oracle.hpp>
#include <rnsdiv/scaling.hpp>
#include <rnsdiv/trace_emit.hpp>

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using namespace rnsdiv;

namespace {

constexpr int kUsage = 1;
constexpr int kArith = 2;
constexpr int kFailed = 3;

struct Usage : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw Usage("cannot read " + path);
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Cells separated by commas or whitespace: `v` (full power), `v@m` (current
// modulus m) or `*` (invalid).
RnsValue parse_cells(const std::string& text, const FormatPtr& fmt) {
    std::string norm = text;
    for (char& c : norm) {
        if (c == ',') {
            c = ' ';
        }
    }
    std::istringstream in(norm);
    std::vector<DigitState> digits;
    std::string tok;
    while (in >> tok) {
        const std::size_t i = digits.size();
        if (i >= fmt->size()) {
            throw Usage("more cells than the format's " + std::to_string(fmt->size()) + " digits");
        }
        const auto& s = (*fmt)[i];
        if (tok == "*") {
            digits.push_back({0, 0});
            continue;
        }
        std::uint32_t power = s.max_power;
        const auto at = tok.find('@');
        try {
            if (at != std::string::npos) {
                const auto m = std::stoul(tok.substr(at + 1));
                power = 0;
                for (std::uint32_t p = 1; p <= s.max_power; ++p) {
                    if (s.modulus_at(p) == m) {
                        power = p;
                    }
                }
                if (power == 0) {
                    throw Usage("'" + tok + "': " + std::to_string(m) + " is not a power of " +
                                std::to_string(s.base));
                }
            }
            const auto v = std::stoul(tok.substr(0, at));
            if (v >= s.modulus_at(power)) {
                throw Usage("'" + tok + "' is out of range for digit " + std::to_string(i + 1));
            }
            digits.push_back({static_cast<std::uint32_t>(v), power});
        } catch (const std::logic_error&) {
            throw Usage("bad cell '" + tok + "'");
        }
    }
    if (digits.size() != fmt->size()) {
        throw Usage("expected " + std::to_string(fmt->size()) + " cells, got " + std::to_string(digits.size()));
    }
    return RnsValue(fmt, std::move(digits));
}

std::string show_value(const RnsValue& v) {
    std::ostringstream out;
    out << "digits ";
    for (std::size_t i = 0; i < v.size(); ++i) {
        out << (i ? " " : "") << (v.valid(i) ? std::to_string(v.value(i)) : "*");
    }
    out << "\nmoduli ";
    for (std::size_t i = 0; i < v.size(); ++i) {
        out << (i ? " " : "") << v.current_modulus(i);
    }
    return out.str();
}

BigInt parse_big(const std::string& s) {
    try {
        return parse_decimal(s);
    } catch (const RnsError& e) {
        throw Usage(e.what());
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Residue number system division toolkit"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string config;
    std::string format_name = "mod9";
    app.add_option("--config", config, "Format description file (width/power/plain lines)");
    app.add_option("--format", format_name, "Built-in format: mod9, mod9-power or toy")
        ->check(CLI::IsMember({"mod9", "mod9-power", "toy"}));

    std::string trace_fmt = "md";
    auto add_trace = [&](CLI::App* sub) {
        sub->add_option("--trace", trace_fmt, "Trace format: md, csv or json")
            ->check(CLI::IsMember({"md", "csv", "json"}));
    };

    auto* format_cmd = app.add_subcommand("format", "Print the digit moduli, range and efficiency");
    auto* luts_cmd = app.add_subcommand("luts", "Print the power-based inverse table");

    std::string x_arg;
    std::string y_arg;
    auto* encode_cmd = app.add_subcommand("encode", "Decimal to residues");
    encode_cmd->add_option("X", x_arg)->required();
    std::string cells_arg;
    auto* decode_cmd = app.add_subcommand("decode", "Residues (v, v@m or *) to decimal");
    decode_cmd->add_option("DIGITS", cells_arg, "Comma-separated cells")->required();

    std::vector<std::uint64_t> factors;
    auto* scale_cmd = app.add_subcommand("scale", "Scale by a sequence of base powers");
    scale_cmd->add_option("X", x_arg)->required();
    scale_cmd->add_option("--factors", factors, "Base powers, applied in order")->required()->delimiter(',');
    add_trace(scale_cmd);

    auto* mrc_cmd = app.add_subcommand("mrc", "Mixed-radix conversion");
    mrc_cmd->add_option("X", x_arg)->required();
    add_trace(mrc_cmd);

    std::string file_arg;
    auto* extend_cmd = app.add_subcommand("extend", "Base-extend the value in a digit file");
    extend_cmd->add_option("FILE", file_arg, "Cells: v, v@m or *")->required()->check(CLI::ExistingFile);
    add_trace(extend_cmd);

    auto* decompose_cmd = app.add_subcommand("decompose", "Decompose a divisor into its factor script");
    decompose_cmd->add_option("Y", y_arg)->required();
    add_trace(decompose_cmd);

    bool live = false;
    bool show_trace = false;
    std::string script_file;
    std::string script_out;
    auto* div_cmd = app.add_subcommand("div", "Integer division X / Y");
    div_cmd->add_option("X", x_arg)->required();
    div_cmd->add_option("Y", y_arg)->required();
    div_cmd->add_flag("--live", live, "Re-run the divisor decomposition every iteration");
    auto* trace_opt = div_cmd->add_option("--trace", trace_fmt, "Print the step trace: md, csv or json")
                          ->check(CLI::IsMember({"md", "csv", "json"}));
    div_cmd->add_option("--script", script_file, "Replay this divisor script")->check(CLI::ExistingFile);
    div_cmd->add_option("--save-script", script_out, "Write the divisor script here");

    auto* selftest_cmd = app.add_subcommand("selftest", "Replay the worked examples and verify the inverse table");

    std::size_t count = 1000;
    std::uint64_t seed = 1;
    bool exhaustive = false;
    bool as_json = false;
    unsigned jobs = 1;
    std::string trace_dir;
    auto* fuzz_cmd = app.add_subcommand("fuzz", "Compare divisions against big-integer arithmetic");
    fuzz_cmd->add_option("--count", count);
    fuzz_cmd->add_option("--seed", seed);
    fuzz_cmd->add_flag("--exhaustive-toy", exhaustive, "Every pair on the 360-range toy format");
    fuzz_cmd->add_flag("--json", as_json);
    fuzz_cmd->add_flag("--live", live);
    fuzz_cmd->add_option("--jobs", jobs)->check(CLI::Range(1u, 256u));
    fuzz_cmd->add_option("--trace-dir", trace_dir, "Write a JSON trace per failing case here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kUsage;
    }

    try {
        FormatPtr fmt;
        if (!config.empty()) {
            fmt = load_format_config(config);
        } else if (format_name == "toy") {
            fmt = toy_format();
        } else if (format_name == "mod9-power") {
            fmt = mod9_power_format();
        } else {
            fmt = mod9_default_format();
        }
        const auto tfmt = *parse_trace_format(trace_fmt);
        auto print_trace = [&](const Trace& t) { std::cout << emit_trace(t.rows(), tfmt); };

        if (*format_cmd) {
            std::cout << describe(*fmt);
            return 0;
        }
        if (*luts_cmd) {
            const InverseTable tbl(fmt);
            std::cout << render_inverse_table(tbl);
            return 0;
        }
        if (*encode_cmd) {
            std::cout << show_value(encode(parse_big(x_arg), fmt)) << '\n';
            return 0;
        }
        if (*decode_cmd) {
            std::cout << decode(parse_cells(cells_arg, fmt)) << '\n';
            return 0;
        }
        const InverseTable tbl(fmt);
        if (*scale_cmd) {
            std::vector<ScaleFactor> steps;
            for (auto f : factors) {
                const auto sf = factor_for(*fmt, f);
                if (!sf) {
                    throw Usage(std::to_string(f) + " is not a power of any digit base");
                }
                steps.push_back(*sf);
            }
            Trace t;
            const auto out = multi_factor_scale(encode(parse_big(x_arg), fmt), steps, tbl, &t);
            print_trace(t);
            std::cout << "result " << decode(out) << '\n';
            return 0;
        }
        if (*mrc_cmd) {
            Trace t;
            const auto digits = mrc_digits(encode(parse_big(x_arg), fmt), tbl, &t);
            print_trace(t);
            std::cout << "a =";
            for (const auto& d : digits) {
                std::cout << ' ' << d.a;
            }
            std::cout << "\nvalue " << mrc_value(digits) << '\n';
            return 0;
        }
        if (*extend_cmd) {
            Trace t;
            const auto out = base_extend(parse_cells(read_file(file_arg), fmt), tbl, &t);
            print_trace(t);
            std::cout << show_value(out) << "\nvalue " << decode(out) << '\n';
            return 0;
        }
        if (*decompose_cmd) {
            Trace t;
            const auto script = decompose(encode(parse_big(y_arg), fmt), tbl, &t);
            print_trace(t);
            for (const auto& s : script.steps) {
                std::cout << describe(s, *fmt) << '\n';
            }
            std::cout << "ŷ = " << script.y_hat << '\n';
            return 0;
        }
        if (*div_cmd) {
            DivisionOptions opts;
            opts.mode = live ? DivisionMode::Live : DivisionMode::Replay;
            show_trace = trace_opt->count() > 0;
            opts.record_trace = show_trace;
            if (!script_file.empty()) {
                opts.script = parse_script(read_file(script_file), *fmt);
            }
            const auto r = divide(encode(parse_big(x_arg), fmt), encode(parse_big(y_arg), fmt), tbl, opts);
            if (show_trace) {
                print_trace(r.trace);
            }
            if (!script_out.empty()) {
                std::ofstream(script_out) << serialize_script(r.script);
            }
            std::cout << "quotient " << decode(r.quotient) << " remainder " << decode(r.remainder) << '\n'
                      << "iterations " << r.iterations << " corrections " << r.corrections << " cycles "
                      << r.cycle_estimate << '\n';
            return 0;
        }
        if (*selftest_cmd) {
            const auto rep = run_selftest();
            std::cout << rep.to_text();
            return rep.ok() ? 0 : kFailed;
        }
        if (*fuzz_cmd) {
            FuzzReport rep;
            if (exhaustive) {
                rep = exhaustive_divisions(InverseTable(toy_format()), jobs);
            } else {
                FuzzOptions opts;
                opts.count = count;
                opts.seed = seed;
                opts.jobs = jobs;
                opts.mode = live ? DivisionMode::Live : DivisionMode::Replay;
                if (!trace_dir.empty()) {
                    opts.trace_dir = trace_dir;
                }
                rep = fuzz_divisions(tbl, opts);
            }
            std::cout << (as_json ? rep.to_json().dump(2) + "\n" : rep.to_text());
            return rep.ok() ? 0 : kFailed;
        }
    } catch (const Usage& e) {
        std::cerr << "rnsdiv: " << e.what() << '\n';
        return kUsage;
    } catch (const StepError& e) {
        std::cerr << "rnsdiv: step " << e.step() << ": " << e.what() << '\n';
        return kArith;
    } catch (const RnsError& e) {
        std::cerr << "rnsdiv: " << e.what() << '\n';
        switch (e.code()) {
        case Errc::Parse:
        case Errc::NotPrime:
        case Errc::DuplicateBase:
        case Errc::WidthOverflow:
        case Errc::MissingBaseTwo:
        case Errc::OutOfRange:
            return kUsage;
        default:
            return kArith;
        }
    }
    return kUsage;
}
