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

#include <rnsdiv/division.hpp>
#include <rnsdiv/errors.hpp>
#include <rnsdiv/mixed_radix.hpp>
#include <rnsdiv/scaling.hpp>

#include <stdexcept>

namespace rnsdiv {

std::string_view to_string(EngineState s) noexcept {
    switch (s) {
    case EngineState::Idle: return "IDLE";
    case EngineState::LoadInit: return "LOAD_INIT";
    case EngineState::IncDenom: return "INC_DENOM";
    case EngineState::DivDenom: return "DIV_DENOM";
    case EngineState::BaseExtend: return "BASE_EXTEND";
    case EngineState::UpdateAccum: return "UPDATE_ACCUM";
    case EngineState::CalcNumer: return "CALC_NUMER";
    case EngineState::Compare: return "COMPARE";
    case EngineState::CalcRem: return "CALC_REM";
    case EngineState::Done: return "DONE";
    case EngineState::DivByZero: return "DIV_BY_ZERO";
    }
    return "?";
}

namespace {

// Guards against a script that never converges; real divisions stop after a
// few hundred iterations at most.
constexpr std::size_t kMaxIterations = 100000;

void enter(Trace* t, EngineState s) {
    if (t) {
        t->enter(to_string(s));
    }
}

void row(Trace* t, std::string_view reg, std::string_view action, const RnsValue& v, std::string note = {}) {
    if (t && t->recording()) {
        t->value_row(reg, action, v, std::move(note));
    }
}

void step(Trace* t) {
    if (t && t->recording()) {
        t->next_step();
    }
}

bool recording(const Trace* t) { return t && t->recording(); }

std::string dec(const RnsValue& v) { return decode(v).str(); }

RnsValue scale_counted(const RnsValue& v, const ScaleStep& s, const InverseTable& tbl, Trace* t) {
    RnsValue out = scale_by_power(v, s.digit, s.k, tbl);
    if (t) {
        ++t->counters().scales;
    }
    return out;
}

BaseExtension extend_counted(const RnsValue& v, const InverseTable& tbl, Trace* t) {
    auto ext = base_extend_detailed(v, tbl);
    if (t) {
        t->counters().mrc_digits += ext.digits.size();
    }
    return ext;
}

// Subtracts the offset that makes the dividend divisible by the step's factor.
// Returns false when the register reaches zero.
bool numer_offset(RnsValue& numer, const ScaleStep& s, Trace* t) {
    const std::uint32_t off = offset_for(numer, s.digit, s.k);
    const std::string before = recording(t) ? dec(numer) : std::string{};
    numer = subtract_scalar(numer, off);
    if (recording(t)) {
        row(t, "NUMER", "Subtract " + std::to_string(off) + " from NUMER", numer,
            before + "-" + std::to_string(off) + "=" + dec(numer));
    }
    if (is_zero(numer)) {
        row(t, "NUMER", "Zero detected", numer, "NUMER = 0 detected");
        return false;
    }
    return true;
}

std::string scale_note(const RnsValue& before, const RnsValue& after, const ScaleStep& s) {
    std::string note = dec(before) + "/" + std::to_string(s.factor) + "=" + dec(after);
    if (after.valid(s.digit)) {
        note += "; M_" + std::to_string(s.digit + 1) + "=" + std::to_string(after.current_modulus(s.digit));
    } else {
        note += "; d_" + std::to_string(s.digit + 1) + " invalidated";
    }
    return note;
}

RnsValue denom_increment(const RnsValue& denom, Trace* t) {
    enter(t, EngineState::IncDenom);
    step(t);
    RnsValue out = increment(denom);
    if (t) {
        ++t->counters().increments;
    }
    if (recording(t)) {
        row(t, "DENOM", "Increment DENOM", out, dec(denom) + "+1=" + dec(out));
    }
    return out;
}

RnsValue denom_scale(const RnsValue& denom, const ScaleStep& s, const InverseTable& tbl, Trace* t) {
    enter(t, EngineState::DivDenom);
    step(t);
    if (recording(t)) {
        t->cells_row("", "Value of 1/" + std::to_string(s.factor), inverse_cells(denom, s.digit, s.k, tbl),
                     denom, "Multiplicative inverses");
    }
    RnsValue out = scale_counted(denom, s, tbl, t);
    if (recording(t)) {
        row(t, "DENOM", "Multiply by 1/" + std::to_string(s.factor), out, scale_note(denom, out, s));
    }
    return out;
}

RnsValue extend_register(const RnsValue& v, std::string_view reg, const InverseTable& tbl, Trace* t) {
    auto ext = extend_counted(v, tbl, t);
    row(t, reg, "Base extend", ext.value, std::string(reg) + "=" + (recording(t) ? dec(ext.value) : ""));
    return std::move(ext.value);
}

// One full pass of the divisor decomposition with DENOM rows.
FactorScript decompose_denom(const RnsValue& y, const InverseTable& tbl, Trace* t) {
    FactorScript script;
    RnsValue denom = y;
    while (auto s = next_step(denom)) {
        if (const auto* sc = std::get_if<ScaleStep>(&*s)) {
            denom = denom_scale(denom, *sc, tbl, t);
            script.y_hat *= sc->factor;
        } else if (std::holds_alternative<IncrementStep>(*s)) {
            denom = denom_increment(denom, t);
            ++script.increments;
        } else {
            enter(t, EngineState::BaseExtend);
            step(t);
            denom = extend_register(denom, "DENOM", tbl, t);
        }
        script.steps.push_back(*s);
    }
    return script;
}

// Checks that a caller-supplied script really takes y to one and recomputes
// its y_hat.
FactorScript validate_script(const RnsValue& y, const FactorScript& script, const InverseTable& tbl) {
    FactorScript out;
    RnsValue cur = y;
    for (std::size_t i = 0; i < script.steps.size(); ++i) {
        try {
            cur = apply_divisor_step(cur, script.steps[i], tbl);
        } catch (const RnsError& e) {
            throw StepError(e, i);
        }
        if (const auto* sc = std::get_if<ScaleStep>(&script.steps[i])) {
            out.y_hat *= sc->factor;
        } else if (std::holds_alternative<IncrementStep>(script.steps[i])) {
            ++out.increments;
        }
    }
    if (!is_one(cur)) {
        throw RnsError(Errc::InvalidSpec, "script does not reduce the divisor to one");
    }
    out.steps = script.steps;
    return out;
}

// Live mode: the divisor decomposition runs again alongside the dividend.
NumerScaling live_scaling(const RnsValue& numer, const RnsValue& y, const InverseTable& tbl, Trace* t) {
    RnsValue n = numer;
    RnsValue denom = y;
    while (auto s = next_step(denom)) {
        if (const auto* sc = std::get_if<ScaleStep>(&*s)) {
            enter(t, EngineState::DivDenom);
            step(t);
            if (!numer_offset(n, *sc, t)) {
                return {n, true};
            }
            step(t);
            if (recording(t)) {
                t->cells_row("", "Value of 1/" + std::to_string(sc->factor),
                             inverse_cells(n, sc->digit, sc->k, tbl), n, "Multiplicative inverses");
            }
            RnsValue scaled = scale_counted(n, *sc, tbl, t);
            if (recording(t)) {
                row(t, "NUMER", "Multiply by 1/" + std::to_string(sc->factor), scaled, scale_note(n, scaled, *sc));
            }
            n = std::move(scaled);
            RnsValue d = scale_counted(denom, *sc, tbl, t);
            if (recording(t)) {
                row(t, "DENOM", "Multiply by 1/" + std::to_string(sc->factor), d, scale_note(denom, d, *sc));
            }
            denom = std::move(d);
        } else if (std::holds_alternative<IncrementStep>(*s)) {
            denom = denom_increment(denom, t);
        } else {
            enter(t, EngineState::BaseExtend);
            step(t);
            n = extend_register(n, "NUMER", tbl, t);
            denom = extend_register(denom, "DENOM", tbl, t);
        }
    }
    return {n, false};
}

} // namespace

NumerScaling apply_script_to_numer(const RnsValue& numer, const FactorScript& script, const InverseTable& tbl,
                                   Trace* trace) {
    RnsValue n = numer;
    for (const auto& s : script.steps) {
        if (const auto* sc = std::get_if<ScaleStep>(&s)) {
            enter(trace, EngineState::DivDenom);
            step(trace);
            if (!numer_offset(n, *sc, trace)) {
                return {n, true};
            }
            RnsValue scaled = scale_counted(n, *sc, tbl, trace);
            if (recording(trace)) {
                row(trace, "NUMER", "Multiply by 1/" + std::to_string(sc->factor), scaled,
                    scale_note(n, scaled, *sc));
            }
            n = std::move(scaled);
        } else if (std::holds_alternative<BaseExtendStep>(s)) {
            enter(trace, EngineState::BaseExtend);
            step(trace);
            n = extend_register(n, "NUMER", tbl, trace);
        }
    }
    return {n, false};
}

Correction final_correction(const RnsValue& residual, const RnsValue& y, const RnsValue& accum,
                            const InverseTable& tbl, Trace* trace) {
    Correction c{accum, residual, 0};
    const RnsValue one = constant_like(accum, 1);
    while (true) {
        enter(trace, EngineState::Compare);
        step(trace);
        const auto cmp = compare(c.remainder, y, tbl, trace);
        if (recording(trace)) {
            const std::string rel = cmp < 0 ? " < " : (cmp == 0 ? " = " : " > ");
            row(trace, "OLD NUMER", "Compare NUMER to DENOM", c.remainder, dec(c.remainder) + rel + dec(y));
            row(trace, "DENOM", "", y);
        }
        if (cmp < 0) {
            return c;
        }
        c.remainder = pac_sub(c.remainder, y);
        c.accum = pac_add(c.accum, one);
        ++c.count;
        if (trace) {
            trace->counters().pac_ops += 2;
        }
        row(trace, "ACCUM", "Add one to ACCUM", c.accum, recording(trace) ? "ACCUM=" + dec(c.accum) : "");
    }
}

std::uint64_t cycle_estimate(const Trace& trace) noexcept {
    const auto& c = trace.counters();
    return 2 * c.mrc_digits + 2 * c.scales + c.increments + c.pac_ops + c.transitions;
}

DivisionResult divide(const RnsValue& x_in, const RnsValue& y_in, const InverseTable& tbl,
                      const DivisionOptions& options) {
    if (!(x_in.format() == y_in.format()) || !(x_in.format() == tbl.format())) {
        throw RnsError(Errc::FormatMismatch, "dividend, divisor and inverse table must share one format");
    }
    DivisionResult r{x_in, x_in, 0, 0, 0, {}, {}, Trace(options.record_trace)};
    Trace* t = &r.trace;

    enter(t, EngineState::Idle);
    if (is_zero(y_in)) {
        enter(t, EngineState::DivByZero);
        throw RnsError(Errc::DivideByZero, "division by zero");
    }
    enter(t, EngineState::LoadInit);
    const RnsValue x = x_in.normalized() ? x_in : extend_counted(x_in, tbl, t).value;
    const RnsValue y = y_in.normalized() ? y_in : extend_counted(y_in, tbl, t).value;
    const RnsValue zero = constant_like(x, 0);
    step(t);
    if (recording(t)) {
        row(t, "NUMER", "Starting value", x, "X=" + dec(x));
        row(t, "DENOM", "Starting value", y, "Y=" + dec(y));
        row(t, "ACCUM", "Starting value", zero, "ACCUM=0");
    }

    auto finish = [&](const RnsValue& q, const RnsValue& rem) {
        enter(t, EngineState::Done);
        step(t);
        row(t, "QUOTIENT", "Move ACCUM to QUOTIENT", q, recording(t) ? "Q=" + dec(q) : "");
        row(t, "REM", "Remainder", rem, recording(t) ? "R=" + dec(rem) : "");
        r.quotient = q;
        r.remainder = rem;
        r.cycle_estimate = cycle_estimate(r.trace);
    };

    if (is_one(y)) {
        finish(x, zero);
        return r;
    }
    if (is_zero(x)) {
        finish(zero, zero);
        return r;
    }
    if (increment_wraps(y)) {
        // Y = R - 1 cannot be decomposed; no representable X exceeds it.
        enter(t, EngineState::Compare);
        const bool eq = compare(x, y, tbl, t) == 0;
        finish(eq ? constant_like(x, 1) : zero, eq ? zero : x);
        return r;
    }

    const bool live = options.mode == DivisionMode::Live;
    if (live) {
        Trace quiet(false);
        r.script = decompose(y, tbl, &quiet);
    } else if (options.script) {
        r.script = validate_script(y, *options.script, tbl);
    } else {
        r.script = decompose_denom(y, tbl, t);
    }

    RnsValue accum = zero;
    RnsValue residual = x;
    while (true) {
        if (r.iterations == kMaxIterations) {
            throw std::logic_error("division did not converge");
        }
        ++r.iterations;
        NumerScaling ns = live ? live_scaling(residual, y, tbl, t) : apply_script_to_numer(residual, r.script, tbl, t);
        if (ns.reached_zero) {
            r.partial_quotients.push_back(zero);
            break;
        }
        RnsValue z = std::move(ns.z);
        if (!z.normalized()) {
            enter(t, EngineState::BaseExtend);
            step(t);
            z = extend_register(z, "NUMER", tbl, t);
        }
        r.partial_quotients.push_back(z);
        if (is_zero(z)) {
            break;
        }

        enter(t, EngineState::UpdateAccum);
        step(t);
        accum = pac_add(accum, z);
        t->counters().pac_ops += 1;
        row(t, "ACCUM", "NUMER added", accum, recording(t) ? "ACCUM=" + dec(accum) : "");

        enter(t, EngineState::CalcNumer);
        step(t);
        residual = pac_sub(x, pac_mul(accum, y));
        t->counters().pac_ops += 2;
        if (recording(t)) {
            row(t, "NUMER", "X-(ACCUM*Y)", residual, "NUMER=" + dec(residual));
            if (live) {
                row(t, "DENOM", "Reload divisor", y, "Y=" + dec(y));
            }
        }
    }

    Correction c = final_correction(residual, y, accum, tbl, t);
    r.corrections = c.count;

    enter(t, EngineState::CalcRem);
    step(t);
    RnsValue rem = pac_sub(x, pac_mul(c.accum, y));
    t->counters().pac_ops += 2;
    if (!(rem == c.remainder)) {
        throw std::logic_error("remainder check failed");
    }
    row(t, "REM", "X-(ACCUM*Y)", rem, recording(t) ? "REM=" + dec(rem) : "");
    finish(c.accum, rem);
    return r;
}

} // namespace rnsdiv
