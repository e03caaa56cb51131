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

#include "hamsim/expm.hpp"

#include <cmath>

#include "hamsim/errors.hpp"

namespace hamsim {

CMat expm(const CMat &a) {
    if (!a.is_finite()) {
        throw ValidationError("expm: non-finite entries");
    }
    double norm = a.fro_norm();
    if (norm > 50.0) {
        throw ValidationError("expm: ||A||_F = " + std::to_string(norm) +
                              " exceeds the supported range (50)");
    }
    const std::size_t d = a.dim();

    // Scale until ||B|| <= 0.5, Taylor to machine precision, square back up.
    int squarings = 0;
    double scaled = norm;
    while (scaled > 0.5) {
        scaled *= 0.5;
        squarings++;
    }
    CMat b = a;
    b *= std::ldexp(1.0, -squarings);

    CMat sum = CMat::identity(d);
    CMat term = CMat::identity(d);
    for (int k = 1; k <= 60; k++) {
        term = term * b;
        term *= 1.0 / static_cast<double>(k);
        sum += term;
        if (term.fro_norm() <= 1e-17 * sum.fro_norm()) {
            break;
        }
    }
    for (int k = 0; k < squarings; k++) {
        sum = sum * sum;
    }
    return sum;
}

}  // namespace hamsim
