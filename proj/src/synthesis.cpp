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

#include "hamsim/synthesis.hpp"

#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "hamsim/errors.hpp"
#include "hamsim/majorization.hpp"
#include "hamsim/simplex.hpp"
#include "hamsim/su_basis.hpp"

namespace hamsim {

namespace {

double plan_residual(const std::vector<PlanTerm> &terms, const Hamiltonian &h,
                     const Hamiltonian &h_target) {
    CMat acc(h.dim());
    for (const auto &t : terms) {
        CMat conj = conjugate_by(t.u, h.mat());
        conj *= t.tau;
        acc += conj;
    }
    return (acc - h_target.mat()).fro_norm();
}

void require_residual(const SimulationPlan &plan) {
    double allowed = 1e-7 * std::max(1.0, plan.h_target.fro_norm());
    if (plan.residual > allowed) {
        throw ToleranceError("synthesized plan misses its target by " +
                             std::to_string(plan.residual));
    }
    if (plan.overhead < plan.lower_bound - 1e-7) {
        throw ToleranceError("plan overhead fell below the lower bound");
    }
}

}  // namespace

double majorization_lower_bound(const Hamiltonian &h, const Hamiltonian &h_target) {
    if (h.dim() != h_target.dim()) {
        throw ValidationError("source and target dimensions differ");
    }
    if (h_target.is_zero()) return 0.0;
    if (h.is_zero()) {
        throw InfeasibleError("a zero Hamiltonian cannot simulate a nonzero target");
    }
    const auto &mu = h_target.spectrum();
    const auto &lam = h.spectrum();
    double bound = 0.0;
    double pm = 0.0;
    double pl = 0.0;
    // Traceless and nonzero makes every proper prefix sum of lam positive.
    for (std::size_t k = 0; k + 1 < lam.size(); k++) {
        pm += mu[k];
        pl += lam[k];
        if (pl > 0.0) bound = std::max(bound, pm / pl);
    }
    return bound;
}

SimulationPlan eigenbasis_synthesis(const Hamiltonian &h, const Hamiltonian &h_target) {
    double bound = majorization_lower_bound(h, h_target);
    if (h_target.is_zero()) {
        return SimulationPlan{PlanStatus::kSuccess, h, h_target, {}, 0.0, 0.0, 0.0};
    }

    std::size_t d = h.dim();
    std::vector<double> scaled = h.spectrum();
    for (double &v : scaled) v *= bound;
    RealMat transfer = majorization_transfer(h_target.spectrum(), scaled);
    auto decomp = birkhoff_decompose(transfer);

    const CMat &w = h.eigenvectors();
    CMat wt_adj = h_target.eigenvectors().adjoint();
    std::vector<PlanTerm> terms;
    terms.reserve(decomp.terms.size());
    double overhead = 0.0;
    for (const auto &bt : decomp.terms) {
        // U = W P^T Wt^dag sends the target eigenbasis through the inverse
        // permutation onto the source one, so U^dag H U realigns the scaled
        // spectrum exactly as the transfer matrix prescribes.
        CMat pt(d);
        for (std::size_t c = 0; c < d; c++) pt(bt.perm[c], c) = 1.0;
        double tau = bound * bt.p;
        overhead += tau;
        terms.push_back({tau, w * pt * wt_adj});
    }

    SimulationPlan plan{PlanStatus::kSuccess, h,        h_target,
                        std::move(terms),     overhead, bound,
                        0.0};
    plan.residual = plan_residual(plan.terms, h, h_target);
    require_residual(plan);
    return plan;
}

SimulationPlan lp_synthesize(const MatrixGroup &group, const Hamiltonian &h,
                             const Hamiltonian &h_target) {
    if (group.dim != h.dim() || h.dim() != h_target.dim()) {
        throw ValidationError("group and Hamiltonian dimensions differ");
    }
    if (h_target.is_zero()) {
        return SimulationPlan{PlanStatus::kSuccess, h, h_target, {}, 0.0, 0.0, 0.0};
    }

    std::size_t m = su_dim(h.dim());
    std::size_t n = group.order();
    RealMat a(m, n);
    for (std::size_t j = 0; j < n; j++) {
        auto col = vec_su(conjugate_by(group.elements[j], h.mat()));
        for (std::size_t r = 0; r < m; r++) a(r, j) = col[r];
    }
    std::vector<double> b = vec_su(h_target.mat());
    std::vector<double> cost(n, 1.0);

    LpSolution sol = solve_lp(a, b, cost);
    if (sol.status == LpStatus::kUnbounded) {
        throw ToleranceError("weight minimization reported unbounded");
    }
    if (sol.status == LpStatus::kInfeasible) {
        return SimulationPlan{PlanStatus::kInfeasible, h,   h_target,
                              {},                      0.0, 0.0,
                              h_target.fro_norm()};
    }

    std::vector<PlanTerm> terms;
    double overhead = 0.0;
    for (std::size_t j = 0; j < n; j++) {
        if (sol.x[j] > 1e-11) {
            overhead += sol.x[j];
            terms.push_back({sol.x[j], group.elements[j]});
        }
    }
    SimulationPlan plan{PlanStatus::kSuccess,
                        h,
                        h_target,
                        std::move(terms),
                        overhead,
                        majorization_lower_bound(h, h_target),
                        0.0};
    plan.residual = plan_residual(plan.terms, h, h_target);
    require_residual(plan);
    return plan;
}

Hamiltonian average_hamiltonian(const SimulationPlan &plan, const Hamiltonian &h) {
    CMat acc(h.dim());
    for (const auto &t : plan.terms) {
        if (t.u.dim() != h.dim()) {
            throw ValidationError("plan and Hamiltonian dimensions differ");
        }
        CMat c = conjugate_by(t.u, h.mat());
        c *= t.tau;
        acc += c;
    }
    return Hamiltonian(std::move(acc));
}

Hamiltonian average_hamiltonian(const PulseSequence &seq, const Hamiltonian &h) {
    if (seq.dim != h.dim()) {
        throw ValidationError("sequence and Hamiltonian dimensions differ");
    }
    CMat acc(h.dim());
    CMat frame = CMat::identity(seq.dim);
    for (const auto &p : seq.pulses) {
        frame = p.v * frame;
        if (p.tau == 0.0) continue;
        CMat c = conjugate_by(frame, h.mat());
        c *= p.tau;
        acc += c;
    }
    return Hamiltonian(std::move(acc));
}

PulseSequence plan_to_sequence(const SimulationPlan &plan) {
    if (plan.terms.empty()) {
        throw ValidationError("cannot express an empty plan as pulses");
    }
    std::size_t d = plan.terms.front().u.dim();
    double total = 0.0;
    for (const auto &t : plan.terms) total += t.tau;
    if (total <= 0.0) {
        throw ValidationError("plan weights sum to zero");
    }

    PulseSequence seq;
    seq.dim = d;
    seq.overhead = total;
    seq.cyclic = true;
    CMat prev = CMat::identity(d);
    for (const auto &t : plan.terms) {
        seq.pulses.push_back({t.u * prev.adjoint(), t.tau / total});
        prev = t.u;
    }
    double closing = (prev - CMat::identity(d)).fro_norm();
    if (closing > 1e-12) {
        seq.pulses.push_back({prev.adjoint(), 0.0});
    }
    return seq;
}

}  // namespace hamsim
