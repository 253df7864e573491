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

#include <rnsdiv/config.hpp>
#include <rnsdiv/errors.hpp>

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

using namespace rnsdiv;

TEST(Config, Mod9FromText) {
    std::string text = "# the default word\nwidth 9\n";
    for (auto [b, p] : {std::pair{11, 2}, {5, 3}, {13, 2}, {3, 5}, {2, 8}, {17, 2}, {7, 3}, {19, 2}}) {
        text += "power " + std::to_string(b) + " " + std::to_string(p) + "\n";
    }
    for (int q : {457, 461, 463, 467, 479, 487, 491, 499, 503, 509}) {
        text += "plain " + std::to_string(q) + "   # prime\n";
    }
    EXPECT_EQ(*parse_format_config(text), *mod9_default_format());
}

TEST(Config, ParseErrors) {
    for (const char* bad : {"power 2 3\n", "width 4\nwidth 5\npower 2 3\n", "width 4\npower 2\n",
                            "width 4\npower 2 3 1\n", "width 4\nbase 2\n", "width -1\n"}) {
        try {
            parse_format_config(bad);
            ADD_FAILURE() << bad;
        } catch (const RnsError& e) {
            EXPECT_EQ(e.code(), Errc::Parse) << bad;
        }
    }
}

TEST(Config, FormatErrorsPassThrough) {
    try {
        parse_format_config("width 4\npower 3 2\nplain 5\n");
        FAIL();
    } catch (const RnsError& e) {
        EXPECT_EQ(e.code(), Errc::MissingBaseTwo);
    }
}

TEST(Config, LoadFile) {
    const auto path = std::filesystem::temp_directory_path() / "rnsdiv_toy.cfg";
    std::ofstream(path) << "width 4\npower 2 3\npower 3 2\npower 5 1\n";
    EXPECT_EQ(*load_format_config(path), *toy_format());
    std::filesystem::remove(path);
    EXPECT_THROW(load_format_config(path), RnsError);
}
