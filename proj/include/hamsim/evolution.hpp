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

#include "hamsim/hamiltonian.hpp"
#include "hamsim/matrix.hpp"
#include "hamsim/pulse.hpp"
#include "hamsim/synthesis.hpp"

namespace hamsim {

struct EvolutionReport {
    double t = 0.0;
    CMat exact;      // exp(-i * generator * t)
    CMat sequenced;  // the piecewise pulse product
    double error = 0.0;          // Frobenius distance, raw
    double error_aligned = 0.0;  // after removing the best global phase
    double scaling_ratio = 0.0;  // error_aligned(t) / error_aligned(t/2); 0 on last
};

// Piecewise-exact product exp(-iH tau_N kt) V_N ... exp(-iH tau_1 kt) V_1
// with V_1 applied first and k the sequence overhead (physical duration is
// overhead * t).
CMat evolve_sequence(const PulseSequence &seq, const Hamiltonian &h, double t);

// Runs the plan's pulse form at t, t/2, ..., t/2^halvings against the exact
// flow of its realized average Hamiltonian. A first-order-correct plan shows
// error ratios near 4 (second-order error), or machine-zero errors when the
// conjugations commute with their own average.
std::vector<EvolutionReport> verify_first_order(const SimulationPlan &plan, double t,
                                                int halvings);

// Same experiment for a bare sequence simulating overhead * (frame average).
std::vector<EvolutionReport> verify_sequence(const PulseSequence &seq,
                                             const Hamiltonian &h, double t,
                                             int halvings);

// Every consecutive pair of reports is acceptable: ratio in [3, 5] or both
// aligned errors below 1e-13.
bool reports_pass(const std::vector<EvolutionReport> &reports);

// Aligned errors never grow while t shrinks (beyond float jitter).
bool reports_monotone(const std::vector<EvolutionReport> &reports);

// 0.1 / ||H||_F, a time well inside the convergence regime.
double default_t0(const Hamiltonian &h);

}  // namespace hamsim
