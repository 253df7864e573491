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

#include <rnsdiv/decomposition.hpp>
#include <rnsdiv/errors.hpp>
#include <rnsdiv/mixed_radix.hpp>
#include <rnsdiv/scaling.hpp>

#include <sstream>

namespace rnsdiv {

std::vector<std::uint32_t> FactorScript::factors() const {
    std::vector<std::uint32_t> out;
    for (const auto& s : steps) {
        if (const auto* sc = std::get_if<ScaleStep>(&s)) {
            out.push_back(sc->factor);
        }
    }
    return out;
}

std::optional<ScriptStep> next_step(const RnsValue& y) {
    if (is_one(y)) {
        return std::nullopt;
    }
    const auto zeros = any_zero(y);
    if (!zeros.empty()) {
        const auto& z = zeros.front();
        const std::uint32_t k = std::min(z.powers, y.power(z.index));
        return ScaleStep{z.index, k, y.format()[z.index].modulus_at(k)};
    }
    if (!y.valid(y.format().base_two_index())) {
        return BaseExtendStep{};
    }
    if (increment_wraps(y)) {
        // y + 1 equals the reduced range and would read back as zero.
        if (!y.normalized()) {
            return BaseExtendStep{};
        }
        throw RnsError(Errc::DecompositionOverflow, "divisor R-1 has no representable increment");
    }
    return IncrementStep{};
}

RnsValue apply_divisor_step(const RnsValue& y, const ScriptStep& step, const InverseTable& tbl, Trace* trace) {
    if (const auto* sc = std::get_if<ScaleStep>(&step)) {
        return scale_by_power(y, sc->digit, sc->k, tbl, trace);
    }
    if (std::holds_alternative<IncrementStep>(step)) {
        RnsValue out = increment(y);
        if (trace) {
            ++trace->counters().increments;
            if (trace->recording()) {
                trace->next_step();
                const BigInt before = decode(y);
                trace->value_row("x", "Increment", out, before.str() + "+1=" + decode(out).str());
            }
        }
        return out;
    }
    auto ext = base_extend_detailed(y, tbl);
    if (trace) {
        trace->counters().mrc_digits += ext.digits.size();
        if (trace->recording()) {
            trace->next_step();
            trace->value_row("x", "Base extend", ext.value, "all moduli restored");
        }
    }
    return std::move(ext.value);
}

FactorScript decompose(const RnsValue& y, const InverseTable& tbl, Trace* trace) {
    if (is_zero(y)) {
        throw RnsError(Errc::DivideByZero, "cannot decompose a zero divisor");
    }
    if (trace && trace->recording()) {
        trace->next_step();
        trace->value_row("x", "Starting value", y, "x=" + decode(y).str());
    }
    FactorScript script;
    RnsValue working = y;
    while (auto step = next_step(working)) {
        if (const auto* sc = std::get_if<ScaleStep>(&*step)) {
            script.y_hat *= sc->factor;
        } else if (std::holds_alternative<IncrementStep>(*step)) {
            ++script.increments;
        }
        working = apply_divisor_step(working, *step, tbl, trace);
        script.steps.push_back(*step);
    }
    if (trace && trace->recording()) {
        trace->next_step();
        trace->value_row("x", "Decomposed to one", working, "y_hat=" + script.y_hat.str());
    }
    return script;
}

std::string serialize_script(const FactorScript& script) {
    std::ostringstream out;
    for (const auto& s : script.steps) {
        if (const auto* sc = std::get_if<ScaleStep>(&s)) {
            out << "scale " << (sc->digit + 1) << ' ' << sc->k << ' ' << sc->factor << '\n';
        } else if (std::holds_alternative<IncrementStep>(s)) {
            out << "increment\n";
        } else {
            out << "base_extend\n";
        }
    }
    out << "y_hat " << script.y_hat.str() << '\n';
    return out.str();
}

FactorScript parse_script(std::string_view text, const RnsFormat& fmt) {
    FactorScript script;
    std::istringstream in{std::string(text)};
    std::string line;
    std::optional<BigInt> stated;
    std::size_t lineno = 0;
    auto fail = [&](const std::string& why) {
        throw RnsError(Errc::Parse, "script line " + std::to_string(lineno) + ": " + why);
    };
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string word;
        if (!(ls >> word) || word[0] == '#') {
            continue;
        }
        if (stated) {
            fail("content after y_hat");
        }
        if (word == "increment") {
            script.steps.emplace_back(IncrementStep{});
            ++script.increments;
        } else if (word == "base_extend") {
            script.steps.emplace_back(BaseExtendStep{});
        } else if (word == "scale") {
            std::size_t digit = 0;
            std::uint32_t k = 0;
            std::uint64_t factor = 0;
            if (!(ls >> digit >> k >> factor)) {
                fail("expected 'scale <digit> <k> <factor>'");
            }
            if (digit < 1 || digit > fmt.power_count()) {
                fail("digit " + std::to_string(digit) + " is not a power-based digit");
            }
            const auto& s = fmt[digit - 1];
            if (k < 1 || k > s.max_power || s.modulus_at(k) != factor) {
                fail("factor " + std::to_string(factor) + " is not " + std::to_string(s.base) + "^" +
                     std::to_string(k) + " within the digit's powers");
            }
            script.steps.emplace_back(ScaleStep{digit - 1, k, static_cast<std::uint32_t>(factor)});
            script.y_hat *= factor;
        } else if (word == "y_hat") {
            std::string value;
            if (!(ls >> value)) {
                fail("missing y_hat value");
            }
            stated = parse_decimal(value);
        } else {
            fail("unknown step '" + word + "'");
        }
    }
    if (stated && *stated != script.y_hat) {
        throw RnsError(Errc::Parse, "stated y_hat " + stated->str() + " differs from the factor product " +
                                        script.y_hat.str());
    }
    return script;
}

std::string describe(const ScriptStep& step, const RnsFormat& fmt) {
    if (const auto* sc = std::get_if<ScaleStep>(&step)) {
        return "Scale by " + std::to_string(sc->factor) + " (" + std::to_string(fmt[sc->digit].base) + "^" +
               std::to_string(sc->k) + ", M_" + std::to_string(sc->digit + 1) + ")";
    }
    if (std::holds_alternative<IncrementStep>(step)) {
        return "Increment";
    }
    return "Base extend";
}

} // namespace rnsdiv
