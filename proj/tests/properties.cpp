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

#include "properties.hpp"

#include <rnsdiv/errors.hpp>
#include <rnsdiv/mixed_radix.hpp>
#include <rnsdiv/scaling.hpp>
#include <rnsdiv/value.hpp>

#include <random>
#include <sstream>

namespace rnsdiv::props {

std::string PropertyResult::summary() const {
    std::ostringstream out;
    out << name << ": " << random_cases << " random + " << exhaustive_cases << " exhaustive, " << failures
        << " failures";
    if (!first_failure.empty()) {
        out << " (first: " << first_failure << ")";
    }
    return out.str();
}

namespace {

struct Ctx {
    FormatPtr fmt = mod9_default_format();
    FormatPtr toy = toy_format();
    InverseTable tbl{fmt};
    InverseTable toy_tbl{toy};
    std::mt19937_64 rng;

    explicit Ctx(std::uint64_t seed) : rng(seed) {}

    // Uniform enough below the bound; the bias from one reduction of a wide
    // random number is negligible for testing.
    BigInt below(const BigInt& bound) {
        BigInt r = 0;
        for (int w = 0; w < 4; ++w) {
            r = (r << 64) + BigInt(rng());
        }
        return r % bound;
    }
    std::size_t pick(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }
};

void note(PropertyResult& r, bool ok, const std::string& what) {
    if (!ok) {
        if (r.failures++ == 0) {
            r.first_failure = what;
        }
    }
}

// Some inputs land on an error path by design; those count as failures with
// the message attached.
template <class F>
void guarded(PropertyResult& r, const std::string& what, F&& f) {
    try {
        note(r, f(), what);
    } catch (const std::exception& e) {
        note(r, false, what + ": " + e.what());
    }
}

// Value in fmt with some digits invalidated or reduced, holding x mod R'.
RnsValue damaged(Ctx& c, const InverseTable& tbl, const BigInt& x, BigInt& held) {
    const auto& fmt = tbl.format();
    std::vector<std::uint32_t> power(fmt.size());
    for (std::size_t i = 0; i < fmt.size(); ++i) {
        power[i] = fmt[i].max_power;
        switch (c.pick(3)) {
        case 0: power[i] = 0; break;
        case 1: power[i] = static_cast<std::uint32_t>(c.pick(fmt[i].max_power + 1)); break;
        default: break;
        }
    }
    power[c.pick(fmt.size())] = 0;
    const std::size_t keep = c.pick(fmt.size());
    if (power[keep] == 0) {
        power[keep] = fmt[keep].max_power;
    }
    BigInt range = 1;
    for (std::size_t i = 0; i < fmt.size(); ++i) {
        range *= fmt[i].modulus_at(power[i]);
    }
    held = x % range;
    RnsValue v = encode(held, tbl.format_ptr());
    for (std::size_t i = 0; i < fmt.size(); ++i) {
        v.set(i, v.value(i), power[i]);
    }
    return v;
}

} // namespace

PropertyResult round_trip(std::uint64_t seed) {
    Ctx c(seed);
    PropertyResult r{"encode/decode round trip"};
    const BigInt R = c.fmt->range();
    for (std::size_t n = 0; n < kRandomCases; ++n, ++r.random_cases) {
        const BigInt x = n < 2 ? (n == 0 ? BigInt(0) : R - 1) : c.below(R);
        guarded(r, "x=" + x.str(), [&] { return decode(encode(x, c.fmt)) == x; });
    }
    for (int x = 0; x < 360; ++x, ++r.exhaustive_cases) {
        guarded(r, "toy x=" + std::to_string(x), [&] { return decode(encode(x, c.toy)) == x; });
    }
    return r;
}

PropertyResult pac_homomorphism(std::uint64_t seed) {
    Ctx c(seed);
    PropertyResult r{"PAC homomorphism"};
    auto check = [&](const FormatPtr& fmt, const BigInt& a, const BigInt& b) {
        const BigInt R = fmt->range();
        const auto ea = encode(a, fmt);
        const auto eb = encode(b, fmt);
        guarded(r, "a=" + a.str() + " b=" + b.str(), [&] {
            return decode(pac_add(ea, eb)) == (a + b) % R && decode(pac_sub(ea, eb)) == (a + R - b) % R &&
                   decode(pac_mul(ea, eb)) == (a * b) % R;
        });
    };
    const BigInt R = c.fmt->range();
    for (std::size_t n = 0; n < kRandomCases; ++n, ++r.random_cases) {
        check(c.fmt, c.below(R), c.below(R));
    }
    for (int a = 0; a < 360; ++a) {
        for (int b = 0; b < 360; ++b, ++r.exhaustive_cases) {
            check(c.toy, a, b);
        }
    }
    return r;
}

PropertyResult scaling_laws(std::uint64_t seed) {
    Ctx c(seed);
    PropertyResult r{"scaling exact division and range"};
    auto check = [&](const InverseTable& tbl, const BigInt& x, std::size_t i, std::uint32_t k) {
        const auto& fmt = tbl.format();
        const auto in = encode(x, tbl.format_ptr());
        guarded(r, "x=" + x.str() + " digit " + std::to_string(i + 1) + " k=" + std::to_string(k), [&] {
            const auto out = scale_by_power(in, i, k, tbl);
            const BigInt d = fmt[i].modulus_at(k);
            return decode(out) == x / d && effective_range(out) == effective_range(in) / d &&
                   out.power(i) == in.power(i) - k;
        });
    };
    const auto& fmt = *c.fmt;
    for (std::size_t n = 0; n < kRandomCases; ++n, ++r.random_cases) {
        const std::size_t i = c.pick(fmt.power_count());
        const auto k = static_cast<std::uint32_t>(1 + c.pick(fmt[i].max_power));
        const BigInt d = fmt[i].modulus_at(k);
        check(c.tbl, c.below(fmt.range() / d) * d, i, k);
    }
    const auto& toy = *c.toy;
    for (int x = 0; x < 360; ++x) {
        for (std::size_t i = 0; i < toy.size(); ++i) {
            for (std::uint32_t k = 1; k <= toy[i].max_power; ++k) {
                if (x % toy[i].modulus_at(k) == 0) {
                    check(c.toy_tbl, x, i, k);
                    ++r.exhaustive_cases;
                }
            }
        }
    }
    // Dividing something that is not a multiple must refuse.
    guarded(r, "non-multiple 7 by 2", [&] {
        try {
            scale_by_power(encode(7, c.toy), *toy.index_of_base(2), 1, c.toy_tbl);
            return false;
        } catch (const RnsError& e) {
            return e.code() == Errc::NotDivisible;
        }
    });
    return r;
}

PropertyResult mrc_reconstruction(std::uint64_t seed) {
    Ctx c(seed);
    PropertyResult r{"MRC reconstruction"};
    for (std::size_t n = 0; n < kRandomCases; ++n, ++r.random_cases) {
        const BigInt x = c.below(c.fmt->range());
        guarded(r, "x=" + x.str(), [&] { return mrc_value(mrc_digits(encode(x, c.fmt), c.tbl)) == x; });
    }
    for (int x = 0; x < 360; ++x, ++r.exhaustive_cases) {
        guarded(r, "toy x=" + std::to_string(x),
                [&] { return mrc_value(mrc_digits(encode(x, c.toy), c.toy_tbl)) == x; });
    }
    return r;
}

PropertyResult base_extension(std::uint64_t seed) {
    Ctx c(seed);
    PropertyResult r{"base extension idempotence and decode"};
    auto check = [&](const InverseTable& tbl, const BigInt& x) {
        BigInt held;
        const RnsValue v = damaged(c, tbl, x, held);
        guarded(r, "x=" + held.str(), [&] {
            const RnsValue once = base_extend(v, tbl);
            return once.normalized() && decode(once) == held && decode(v) == held &&
                   base_extend(once, tbl) == once && once == encode(held, tbl.format_ptr());
        });
    };
    for (std::size_t n = 0; n < kRandomCases; ++n, ++r.random_cases) {
        check(c.tbl, c.below(c.fmt->range()));
    }
    for (int x = 0; x < 360; ++x) {
        for (int rep = 0; rep < 4; ++rep, ++r.exhaustive_cases) {
            check(c.toy_tbl, x);
        }
    }
    return r;
}

PropertyResult compare_order(std::uint64_t seed) {
    Ctx c(seed);
    PropertyResult r{"compare vs integer order"};
    auto check = [&](const InverseTable& tbl, const BigInt& a, const BigInt& b) {
        guarded(r, "a=" + a.str() + " b=" + b.str(), [&] {
            return compare(encode(a, tbl.format_ptr()), encode(b, tbl.format_ptr()), tbl) == (a.compare(b) <=> 0);
        });
    };
    const BigInt R = c.fmt->range();
    for (std::size_t n = 0; n < kRandomCases; ++n, ++r.random_cases) {
        const BigInt a = c.below(R);
        switch (n % 4) {
        case 0: check(c.tbl, a, a); break;
        case 1: check(c.tbl, a, a + 1 < R ? a + 1 : BigInt(0)); break;
        default: check(c.tbl, a, c.below(R)); break;
        }
    }
    for (int a = 0; a < 360; ++a) {
        for (int b = 0; b < 360; ++b, ++r.exhaustive_cases) {
            check(c.toy_tbl, a, b);
        }
    }
    return r;
}

const std::vector<NamedProperty>& all_properties() {
    static const std::vector<NamedProperty> list = {
        {"round_trip", round_trip},         {"pac_homomorphism", pac_homomorphism},
        {"scaling_laws", scaling_laws},     {"mrc_reconstruction", mrc_reconstruction},
        {"base_extension", base_extension}, {"compare_order", compare_order},
    };
    return list;
}

} // namespace rnsdiv::props
