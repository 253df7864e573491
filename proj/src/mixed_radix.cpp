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
#include <rnsdiv/scaling.hpp>

#include <algorithm>

namespace rnsdiv {

RecombinationState::RecombinationState(const RnsFormat& fmt, std::vector<std::size_t> targets)
    : targets_(std::move(targets)) {
    for (std::size_t t : targets_) {
        moduli_.push_back(fmt[t].modulus);
    }
    weight_.assign(targets_.size(), 1);
    accum_.assign(targets_.size(), 0);
    weights_.resize(targets_.size());
    partials_.resize(targets_.size());
}

void RecombinationState::consume(const MixedRadixDigit& digit) {
    for (std::size_t s = 0; s < targets_.size(); ++s) {
        const std::uint64_t m = moduli_[s];
        const std::uint64_t w = weight_[s];
        accum_[s] = static_cast<std::uint32_t>((accum_[s] + digit.a % m * w) % m);
        weights_[s].push_back(static_cast<std::uint32_t>(w));
        partials_[s].push_back(accum_[s]);
        weight_[s] = static_cast<std::uint32_t>(w * (digit.radix % m) % m);
    }
    ++steps_;
}

namespace {

std::optional<std::size_t> smallest_valid(const RnsValue& v) {
    std::optional<std::size_t> best;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v.valid(i) && (!best || v.current_modulus(i) < v.current_modulus(*best))) {
            best = i;
        }
    }
    return best;
}

std::string digit_name(std::size_t i) { return "d_" + std::to_string(i + 1); }

} // namespace

std::vector<MixedRadixDigit> mrc_digits(const RnsValue& v, const InverseTable& tbl, Trace* trace) {
    std::vector<MixedRadixDigit> out;
    const bool rows = trace && trace->recording();
    if (rows) {
        trace->next_step();
        trace->value_row("x", "Starting value", v, "x=" + decode(v).str());
    }
    RnsValue working = v;
    while (true) {
        if (is_zero(working)) {
            if (rows) {
                trace->next_step();
                trace->value_row("x", "Zero detected", working, "STOP");
            }
            break;
        }
        const auto next = smallest_valid(working);
        if (!next) {
            break;
        }
        const std::size_t i = *next;
        const std::uint32_t a = working.value(i);
        const std::uint32_t radix = working.current_modulus(i);
        out.push_back({i, radix, a});
        working = subtract_scalar(working, a);
        if (trace) {
            ++trace->counters().mrc_digits;
        }
        if (rows) {
            trace->next_step();
            trace->value_row("x", "Subtract by " + digit_name(i) + "=" + std::to_string(a), working,
                             "Mixed radix digit a_" + std::to_string(out.size()) + "=" + std::to_string(a));
        }
        if (is_zero(working)) {
            continue;
        }
        working = scale_by_power(working, i, working.power(i), tbl);
        if (rows) {
            trace->next_step();
            trace->value_row("x", "Multiply by 1/" + std::to_string(radix), working,
                             "Dividing by " + std::to_string(radix) + "; " + digit_name(i) + " is invalidated");
        }
    }
    return out;
}

BigInt mrc_value(std::span<const MixedRadixDigit> digits) {
    BigInt value = 0;
    BigInt weight = 1;
    for (const auto& d : digits) {
        value += weight * d.a;
        weight *= d.radix;
    }
    return value;
}

std::strong_ordering compare(const RnsValue& a, const RnsValue& b, const InverseTable& tbl, Trace* trace) {
    if (!(a.format_ptr() == b.format_ptr() || a.format() == b.format())) {
        throw RnsError(Errc::FormatMismatch, "compared values use different formats");
    }
    if (!a.same_pattern(b)) {
        throw RnsError(Errc::ValidityMismatch, "compared values have different power patterns");
    }
    Trace* counting = trace;
    Trace quiet(false);
    if (trace && trace->recording()) {
        counting = &quiet;
    }
    const auto da = mrc_digits(a, tbl, counting);
    const auto db = mrc_digits(b, tbl, counting);
    if (trace && counting == &quiet) {
        trace->counters().mrc_digits += quiet.counters().mrc_digits;
    }
    // Both expansions share one radix sequence; missing positions are zero.
    const std::size_t n = std::max(da.size(), db.size());
    for (std::size_t pos = n; pos-- > 0;) {
        const std::uint32_t x = pos < da.size() ? da[pos].a : 0;
        const std::uint32_t y = pos < db.size() ? db[pos].a : 0;
        if (x != y) {
            return x <=> y;
        }
    }
    return std::strong_ordering::equal;
}

BaseExtension base_extend_detailed(const RnsValue& v, const InverseTable& tbl, Trace* trace) {
    if (!v.any_valid()) {
        throw RnsError(Errc::RangeInsufficient, "no valid digit left to extend from");
    }
    std::vector<std::size_t> targets;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v.power(i) < v.format()[i].max_power) {
            targets.push_back(i);
        }
    }
    RecombinationState rec(v.format(), targets);
    if (targets.empty()) {
        return {v, {}, std::move(rec)};
    }

    const std::size_t first_row = trace ? trace->rows().size() : 0;
    auto digits = mrc_digits(v, tbl, trace);
    for (const auto& d : digits) {
        rec.consume(d);
    }

    RnsValue out = v;
    for (std::size_t s = 0; s < targets.size(); ++s) {
        out.set(targets[s], rec.accumulator(s), v.format()[targets[s]].max_power);
    }

    if (trace && trace->recording()) {
        // Annotate the conversion rows with the running recombination: each
        // subtract row holds a_t and its weight, the row after it shows the
        // accumulated digits.
        auto& rows = trace->rows();
        std::size_t t = 0;
        for (std::size_t r = first_row; r < rows.size() && t < digits.size(); ++r) {
            if (rows[r].action.rfind("Subtract by", 0) != 0) {
                continue;
            }
            std::string hold = " | hold " + std::to_string(digits[t].a);
            std::string acc = " | add";
            for (std::size_t s = 0; s < targets.size(); ++s) {
                const auto w = rec.weight_history(s)[t];
                hold += "; |weight|_" + std::to_string(v.format()[targets[s]].modulus) + "=" + std::to_string(w);
                acc += "; " + digit_name(targets[s]) + "=" + std::to_string(rec.partial_history(s)[t]);
            }
            rows[r].note += hold;
            if (r + 1 < rows.size()) {
                rows[r + 1].note += acc;
            }
            ++t;
        }
        trace->next_step();
        std::string note = "recovered";
        for (std::size_t s = 0; s < targets.size(); ++s) {
            note += " " + digit_name(targets[s]) + "=" + std::to_string(rec.accumulator(s));
        }
        trace->value_row("x", "Base extend", out, std::move(note));
    }
    return {std::move(out), std::move(digits), std::move(rec)};
}

RnsValue base_extend(const RnsValue& v, const InverseTable& tbl, Trace* trace) {
    return base_extend_detailed(v, tbl, trace).value;
}

} // namespace rnsdiv
