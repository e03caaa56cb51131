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

#include "hamsim/pulse.hpp"

#include <cmath>
#include <string>

#include "hamsim/errors.hpp"

namespace hamsim {

std::vector<CMat> PulseSequence::frames() const {
    std::vector<CMat> out;
    out.reserve(pulses.size());
    CMat u = CMat::identity(dim);
    for (const auto &p : pulses) {
        u = p.v * u;
        out.push_back(u);
    }
    return out;
}

void PulseSequence::validate() const {
    if (dim == 0) {
        throw ValidationError("pulse sequence has dimension 0");
    }
    if (pulses.empty()) {
        throw ValidationError("pulse sequence has no pulses");
    }
    if (!std::isfinite(overhead) || overhead < 0.0) {
        throw ValidationError("pulse sequence overhead " + std::to_string(overhead) +
                              " is invalid");
    }
    double total = 0.0;
    for (std::size_t i = 0; i < pulses.size(); i++) {
        const auto &p = pulses[i];
        if (p.v.dim() != dim) {
            throw ValidationError("pulse " + std::to_string(i) + " has dimension " +
                                  std::to_string(p.v.dim()) + ", sequence has " +
                                  std::to_string(dim));
        }
        double defect = p.v.unitary_defect();
        if (defect > 1e-9) {
            throw ValidationError("pulse " + std::to_string(i) +
                                  " is not unitary (defect " + std::to_string(defect) + ")");
        }
        if (!std::isfinite(p.tau) || p.tau < 0) {
            throw ValidationError("pulse " + std::to_string(i) + " has invalid time");
        }
        // Zero time is only meaningful on a final closing pulse.
        if (p.tau == 0 && i + 1 != pulses.size()) {
            throw ValidationError("pulse " + std::to_string(i) +
                                  " has zero time but is not the final pulse");
        }
        total += p.tau;
    }
    if (std::abs(total - 1.0) > 1e-12) {
        throw ValidationError("pulse times sum to " + std::to_string(total) +
                              ", expected 1");
    }
    if (cyclic) {
        CMat u = CMat::identity(dim);
        for (const auto &p : pulses) u = p.v * u;
        double defect = (u - CMat::identity(dim)).fro_norm();
        if (defect > 1e-8) {
            throw ValidationError("sequence marked cyclic but pulses compose to "
                                  "distance " + std::to_string(defect) + " from identity");
        }
    }
}

}  // namespace hamsim
