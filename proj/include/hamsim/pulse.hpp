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

#include <vector>

#include "hamsim/matrix.hpp"

namespace hamsim {

struct Pulse {
    CMat v;      // control unitary, applied before its evolution segment
    double tau;  // relative duration, fraction of the total
};

// Cyclic list of control pulses with relative times and a physical-time
// multiplier. Running the sequence for logical time t means: apply V_1,
// evolve tau_1*overhead*t, apply V_2, ... The accumulated frames are
// U_i = V_i ... V_1, and cyclic means U_N = I.
//
// All relative times are strictly positive except that the final pulse may
// carry tau = 0: a weightless closing rotation that returns the frame to the
// identity when the weighted frames alone cannot (exact inversion is the
// canonical case).
struct PulseSequence {
    std::size_t dim = 0;
    std::vector<Pulse> pulses;
    double overhead = 0.0;
    bool cyclic = false;

    std::size_t size() const { return pulses.size(); }
    std::vector<CMat> frames() const;

    // Enforces the type invariants; throws ValidationError.
    void validate() const;
};

}  // namespace hamsim
