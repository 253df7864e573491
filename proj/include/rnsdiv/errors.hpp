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

#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rnsdiv {

enum class Errc {
    NotPrime,
    DuplicateBase,
    WidthOverflow,
    MissingBaseTwo,
    InvalidSpec,
    OutOfRange,
    FormatMismatch,
    ValidityMismatch,
    DigitInvalid,
    NoInverse,
    NotDivisible,
    PowerExceeded,
    RangeInsufficient,
    DivideByZero,
    DecompositionOverflow,
    Parse,
};

std::string_view to_string(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above.
class RnsError : public std::runtime_error {
public:
    RnsError(Errc code, const std::string& message);

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

/// Raised by multi-step operations; `step()` is the zero-based index of the
/// step that failed.
class StepError : public RnsError {
public:
    StepError(const RnsError& cause, std::size_t step);

    std::size_t step() const noexcept { return step_; }

private:
    std::size_t step_;
};

} // namespace rnsdiv
