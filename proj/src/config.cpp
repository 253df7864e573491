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

#include <fstream>
#include <sstream>

namespace rnsdiv {

FormatPtr parse_format_config(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    std::optional<std::uint32_t> width;
    std::vector<PowerSpec> powers;
    std::vector<std::uint32_t> plain;
    auto fail = [&](const std::string& why) {
        throw RnsError(Errc::Parse, "config line " + std::to_string(lineno) + ": " + why);
    };
    auto read_u32 = [&](std::istringstream& ls, const char* what) {
        long long v = 0;
        if (!(ls >> v) || v < 0 || v > 0xffffffffLL) {
            fail(std::string("expected ") + what);
        }
        return static_cast<std::uint32_t>(v);
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        std::istringstream ls(line);
        std::string key;
        if (!(ls >> key)) {
            continue;
        }
        if (key == "width") {
            if (width) {
                fail("width given twice");
            }
            width = read_u32(ls, "a width");
        } else if (key == "power") {
            const auto base = read_u32(ls, "a base");
            const auto p = read_u32(ls, "a power");
            powers.push_back({base, p});
        } else if (key == "plain") {
            plain.push_back(read_u32(ls, "a prime"));
        } else {
            fail("unknown key '" + key + "'");
        }
        std::string extra;
        if (ls >> extra) {
            fail("trailing text '" + extra + "'");
        }
    }
    if (!width) {
        throw RnsError(Errc::Parse, "config has no width line");
    }
    return make_format(powers, plain, *width);
}

FormatPtr load_format_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw RnsError(Errc::Parse, "cannot read " + path.string());
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_format_config(buf.str());
}

} // namespace rnsdiv
