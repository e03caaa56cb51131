// Copyright 2026 The hamsim Authors
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

#include <stdexcept>
#include <string>

namespace hamsim {

// Bad input: malformed data, dimension mismatch, violated preconditions.
// CLI maps this to exit code 1.
struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string &msg) : std::runtime_error(msg) {}
};

// The requested object provably does not exist (target outside the reachable
// cone, no finite bound, ...). CLI maps this to exit code 2.
struct InfeasibleError : std::runtime_error {
    explicit InfeasibleError(const std::string &msg) : std::runtime_error(msg) {}
};

// An internal numeric check failed after the inputs were accepted
// (non-convergence, residual above tolerance). CLI maps this to exit code 3.
struct ToleranceError : std::runtime_error {
    explicit ToleranceError(const std::string &msg) : std::runtime_error(msg) {}
};

}  // namespace hamsim
