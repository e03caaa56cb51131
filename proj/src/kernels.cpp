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

#include "hamsim/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace hamsim::kernels {

const Backend &active_backend() {
    static const Backend &chosen = []() -> const Backend & {
        const char *env = std::getenv("HAMSIM_KERNELS");
        if (env != nullptr) {
            if (std::strcmp(env, "scalar") == 0) {
                return scalar_backend();
            }
            if (std::strcmp(env, "avx2") == 0 && avx2_backend() != nullptr) {
                return *avx2_backend();
            }
            // Unknown or unsatisfiable request: fall through to autodetect.
        }
        const Backend *simd = avx2_backend();
        return simd != nullptr ? *simd : scalar_backend();
    }();
    return chosen;
}

}  // namespace hamsim::kernels
