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
#include <rnsdiv/trace_emit.hpp>

#include "json.hpp"

#include <sstream>

namespace rnsdiv {

std::optional<TraceFormat> parse_trace_format(std::string_view name) noexcept {
    if (name == "md" || name == "markdown") {
        return TraceFormat::Markdown;
    }
    if (name == "csv") {
        return TraceFormat::Csv;
    }
    if (name == "json") {
        return TraceFormat::Json;
    }
    return std::nullopt;
}

namespace {

std::string md_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '|') {
            out += '\\';
        }
        out += c;
    }
    return out;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + "\"";
}

std::string cell(const std::optional<std::uint32_t>& c) { return c ? std::to_string(*c) : std::string("*"); }

std::string emit_markdown(const std::vector<TraceRow>& rows) {
    const std::size_t n = rows.empty() ? 0 : rows.front().digits.size();
    std::ostringstream out;
    out << "| Step | State | Register | Action |";
    for (std::size_t i = 0; i < n; ++i) {
        out << " d_" << i + 1 << " |";
    }
    out << " Notes |\n|---|---|---|---|";
    for (std::size_t i = 0; i < n; ++i) {
        out << "---|";
    }
    out << "---|\n";
    const std::vector<std::uint32_t>* shown = nullptr;
    for (const auto& r : rows) {
        if (!shown || *shown != r.moduli) {
            out << "|  |  |  | Digit modulus |";
            for (auto m : r.moduli) {
                out << ' ' << m << " |";
            }
            out << "  |\n";
            shown = &r.moduli;
        }
        out << "| " << r.step << " | " << md_escape(r.state) << " | " << md_escape(r.reg) << " | "
            << md_escape(r.action) << " |";
        for (const auto& c : r.digits) {
            out << ' ' << cell(c) << " |";
        }
        out << ' ' << md_escape(r.note) << " |\n";
    }
    return out.str();
}

std::string emit_csv(const std::vector<TraceRow>& rows) {
    const std::size_t n = rows.empty() ? 0 : rows.front().digits.size();
    std::ostringstream out;
    out << "step,state,register,action";
    for (std::size_t i = 0; i < n; ++i) {
        out << ",d_" << i + 1;
    }
    for (std::size_t i = 0; i < n; ++i) {
        out << ",m_" << i + 1;
    }
    out << ",note\n";
    for (const auto& r : rows) {
        out << r.step << ',' << csv_field(r.state) << ',' << csv_field(r.reg) << ',' << csv_field(r.action);
        for (const auto& c : r.digits) {
            out << ',' << cell(c);
        }
        for (auto m : r.moduli) {
            out << ',' << m;
        }
        out << ',' << csv_field(r.note) << '\n';
    }
    return out.str();
}

std::string emit_json(const std::vector<TraceRow>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows) {
        nlohmann::json digits = nlohmann::json::array();
        for (const auto& c : r.digits) {
            digits.push_back(c ? nlohmann::json(*c) : nlohmann::json(nullptr));
        }
        arr.push_back({{"step", r.step},
                       {"state", r.state},
                       {"register", r.reg},
                       {"action", r.action},
                       {"digits", std::move(digits)},
                       {"moduli", r.moduli},
                       {"note", r.note}});
    }
    return arr.dump(2) + "\n";
}

} // namespace

std::string emit_trace(const std::vector<TraceRow>& rows, TraceFormat format) {
    switch (format) {
    case TraceFormat::Markdown: return emit_markdown(rows);
    case TraceFormat::Csv: return emit_csv(rows);
    case TraceFormat::Json: return emit_json(rows);
    }
    return {};
}

std::vector<TraceRow> parse_trace_json(std::string_view text) {
    std::vector<TraceRow> rows;
    try {
        const auto arr = nlohmann::json::parse(text);
        if (!arr.is_array()) {
            throw RnsError(Errc::Parse, "trace JSON must be an array");
        }
        for (const auto& o : arr) {
            TraceRow r;
            r.step = o.at("step").get<int>();
            r.state = o.at("state").get<std::string>();
            r.reg = o.at("register").get<std::string>();
            r.action = o.at("action").get<std::string>();
            for (const auto& c : o.at("digits")) {
                r.digits.push_back(c.is_null() ? std::nullopt : std::optional<std::uint32_t>(c.get<std::uint32_t>()));
            }
            r.moduli = o.at("moduli").get<std::vector<std::uint32_t>>();
            r.note = o.at("note").get<std::string>();
            if (r.moduli.size() != r.digits.size()) {
                throw RnsError(Errc::Parse, "row has " + std::to_string(r.digits.size()) + " digits but " +
                                                std::to_string(r.moduli.size()) + " moduli");
            }
            rows.push_back(std::move(r));
        }
    } catch (const nlohmann::json::exception& e) {
        throw RnsError(Errc::Parse, std::string("bad trace JSON: ") + e.what());
    }
    return rows;
}

} // namespace rnsdiv
