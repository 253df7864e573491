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
#include <rnsdiv/format.hpp>

#include <gtest/gtest.h>

using namespace rnsdiv;

namespace {

Errc code_of(auto&& fn) {
    try {
        fn();
    } catch (const RnsError& e) {
        return e.code();
    }
    ADD_FAILURE() << "no RnsError thrown";
    return Errc::InvalidSpec;
}

} // namespace

TEST(Format, Mod9Layout) {
    const auto fmt = mod9_default_format();
    ASSERT_EQ(fmt->size(), 18u);
    EXPECT_EQ(fmt->power_count(), 8u);
    const std::uint32_t want[] = {121, 125, 169, 243, 256, 289, 343, 361, 457,
                                  461, 463, 467, 479, 487, 491, 499, 503, 509};
    for (std::size_t i = 0; i < 18; ++i) {
        EXPECT_EQ((*fmt)[i].modulus, want[i]) << i;
    }
    EXPECT_EQ(fmt->base_two_index(), 4u);
    EXPECT_EQ((*fmt)[4].max_power, 8u);
    EXPECT_EQ(fmt->digit_width(), 9u);
    EXPECT_EQ(fmt->max_power(), 8u);
    EXPECT_FALSE((*fmt)[9].power_based);
}

TEST(Format, Mod9Efficiency) {
    const auto fmt = mod9_default_format();
    EXPECT_NEAR(log2_range(*fmt), 151.41, 0.01);
    EXPECT_NEAR(format_efficiency(*fmt), 93.46, 0.01);
    EXPECT_EQ(fmt->range().str(), "3792929481770201541400688756431010528112864000");
}

TEST(Format, ToyFormat) {
    const auto fmt = toy_format();
    ASSERT_EQ(fmt->size(), 3u);
    EXPECT_EQ((*fmt)[0].modulus, 5u);
    EXPECT_EQ((*fmt)[1].modulus, 8u);
    EXPECT_EQ((*fmt)[2].modulus, 9u);
    EXPECT_EQ(fmt->range(), 360);
    EXPECT_EQ(fmt->base_two_index(), 1u);
}

TEST(Format, PowerDigitsPrecedePlainPrimes) {
    // A plain prime smaller than a power modulus still sorts after it.
    const auto fmt = make_format({{2, 3}, {3, 1}}, {5}, 4);
    EXPECT_EQ((*fmt)[0].modulus, 3u);
    EXPECT_EQ((*fmt)[1].modulus, 8u);
    EXPECT_EQ((*fmt)[2].modulus, 5u);
    EXPECT_TRUE(fmt->is_power_digit(1));
    EXPECT_FALSE(fmt->is_power_digit(2));
    EXPECT_EQ(fmt->index_of_base(5), 2u);
    EXPECT_FALSE(fmt->index_of_base(7));
}

TEST(Format, Rejections) {
    EXPECT_EQ(code_of([] { make_format({{2, 3}, {4, 1}}, {}, 4); }), Errc::NotPrime);
    EXPECT_EQ(code_of([] { make_format({{2, 3}}, {9}, 4); }), Errc::NotPrime);
    EXPECT_EQ(code_of([] { make_format({{2, 3}, {3, 1}}, {3}, 4); }), Errc::DuplicateBase);
    EXPECT_EQ(code_of([] { make_format({{3, 2}}, {5}, 4); }), Errc::MissingBaseTwo);
    EXPECT_EQ(code_of([] { make_format({{3, 1}}, {2}, 4); }), Errc::MissingBaseTwo);
    EXPECT_EQ(code_of([] { make_format({{2, 5}}, {}, 4); }), Errc::WidthOverflow);
    EXPECT_EQ(code_of([] { make_format({{2, 3}}, {}, 0); }), Errc::InvalidSpec);
    EXPECT_EQ(code_of([] { make_format({{2, 0}}, {}, 4); }), Errc::InvalidSpec);
}

TEST(Format, WidthBoundaryIsInclusive) {
    // 2^4 = 16 fits a 4-bit width by the M <= 2^n rule; 17 does not.
    EXPECT_NO_THROW(make_format({{2, 4}}, {}, 4));
    EXPECT_EQ(code_of([] { make_format({{2, 1}}, {17}, 4); }), Errc::WidthOverflow);
}

TEST(Format, DescribeMentionsEfficiency) {
    const std::string s = describe(*mod9_default_format());
    EXPECT_NE(s.find("efficiency = 93.46%"), std::string::npos);
    EXPECT_NE(s.find("log2(R) = 151.41"), std::string::npos);
}

TEST(Format, Helpers) {
    EXPECT_TRUE(is_prime(509));
    EXPECT_FALSE(is_prime(511));
    EXPECT_FALSE(is_prime(1));
    EXPECT_EQ(ipow(3, 5), 243u);
    EXPECT_EQ(ipow(7, 0), 1u);
}
