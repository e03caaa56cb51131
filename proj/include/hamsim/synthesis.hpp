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

#include "hamsim/group.hpp"
#include "hamsim/hamiltonian.hpp"
#include "hamsim/matrix.hpp"
#include "hamsim/pulse.hpp"

namespace hamsim {

enum class PlanStatus {
    kSuccess,
    kInfeasible,
};

struct PlanTerm {
    double tau = 0.0;  // absolute weight; the plan's weights sum to overhead
    CMat u;
};

// Recipe realizing H_target = sum tau_j U_j^dag H U_j. The weights are
// absolute (their sum is the time overhead), unlike PulseSequence whose
// times are normalized.
struct SimulationPlan {
    PlanStatus status;
    Hamiltonian h;
    Hamiltonian h_target;
    std::vector<PlanTerm> terms;
    double overhead = 0.0;
    double lower_bound = 0.0;
    double residual = 0.0;
};

// Minimal overhead any conjugation-average scheme needs: the largest ratio
// of descending spectral prefix sums of target over source. Returns 0 for a
// zero target; throws InfeasibleError when H = 0 but the target is not.
double majorization_lower_bound(const Hamiltonian &h, const Hamiltonian &h_target);

// Attains the lower bound with unrestricted controls: transfer the scaled
// source spectrum onto the target spectrum through a doubly stochastic
// matrix, split it into permutations, and conjugate by eigenbasis changes
// composed with those permutations.
SimulationPlan eigenbasis_synthesis(const Hamiltonian &h, const Hamiltonian &h_target);

// Minimizes total weight over conjugations drawn from a finite group via the
// simplex method. Infeasibility (target outside the group's cone) is
// reported in the plan status, not thrown.
SimulationPlan lp_synthesize(const MatrixGroup &group, const Hamiltonian &h,
                             const Hamiltonian &h_target);

// sum tau_j U_j^dag H U_j over the plan's absolute weights: for a successful
// plan this reproduces the realized target.
Hamiltonian average_hamiltonian(const SimulationPlan &plan, const Hamiltonian &h);

// Same average over a sequence's toggling frames with its normalized times;
// the sequence simulates overhead * result.
Hamiltonian average_hamiltonian(const PulseSequence &seq, const Hamiltonian &h);

// Rewrites a plan's conjugating frames as a cyclic pulse sequence with
// normalized times; a weightless closing pulse returns the frame to the
// identity when the last conjugator is not already there.
PulseSequence plan_to_sequence(const SimulationPlan &plan);

}  // namespace hamsim
