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

namespace rnsdiv {

std::string_view to_string(Errc code) noexcept {
    switch (code) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::DuplicateBase: return "DuplicateBase";
    case Errc::WidthOverflow: return "WidthOverflow";
    case Errc::MissingBaseTwo: return "MissingBaseTwo";
    case Errc::InvalidSpec: return "InvalidSpec";
    case Errc::OutOfRange: return "OutOfRange";
    case Errc::FormatMismatch: return "FormatMismatch";
    case Errc::ValidityMismatch: return "ValidityMismatch";
    case Errc::DigitInvalid: return "DigitInvalid";
    case Errc::NoInverse: return "NoInverse";
    case Errc::NotDivisible: return "NotDivisible";
    case Errc::PowerExceeded: return "PowerExceeded";
    case Errc::RangeInsufficient: return "RangeInsufficient";
    case Errc::DivideByZero: return "DivideByZero";
    case Errc::DecompositionOverflow: return "DecompositionOverflow";
    case Errc::Parse: return "Parse";
    }
    return "Unknown";
}

RnsError::RnsError(Errc code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

StepError::StepError(const RnsError& cause, std::size_t step)
    : RnsError(cause.code(), "step " + std::to_string(step) + ": " + cause.what()), step_(step) {}

} // namespace rnsdiv
