// Copyright 2026 The qgfft Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace qg {

// Mirrors the status codes exposed through the C API.
enum class ErrorCode {
    invalid_argument = 1,
    parse = 2,
    graph = 3,
    precondition = 4,
    dimension = 5,
    numeric = 6,
    instability = 7,
    io = 8,
    mismatch = 9,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string &message) : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Raised by the time integrators when the state stops being finite or
/// exceeds the configured blow-up bound. `step()` is the 1-based step index.
class InstabilityError : public Error {
public:
    InstabilityError(std::size_t step, double time, const std::string &message)
        : Error(ErrorCode::instability, message), step_(step), time_(time) {}

    std::size_t step() const noexcept { return step_; }
    double time() const noexcept { return time_; }

private:
    std::size_t step_;
    double time_;
};

}  // namespace qg
