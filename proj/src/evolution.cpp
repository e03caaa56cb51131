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

#include "hamsim/evolution.hpp"

#include <cmath>
#include <string>

#include "hamsim/errors.hpp"
#include "hamsim/expm.hpp"

namespace hamsim {

namespace {

std::vector<EvolutionReport> scaling_reports(const PulseSequence &seq,
                                             const Hamiltonian &h, const CMat &gen,
                                             double t0, int halvings) {
    if (!std::isfinite(t0) || t0 <= 0.0) {
        throw ValidationError("verification time must be positive");
    }
    if (halvings < 2) {
        throw ValidationError("need at least 2 halvings to see a scaling trend");
    }
    std::vector<EvolutionReport> out;
    out.reserve(static_cast<std::size_t>(halvings) + 1);
    double t = t0;
    for (int k = 0; k <= halvings; k++, t *= 0.5) {
        EvolutionReport rep;
        rep.t = t;
        rep.sequenced = evolve_sequence(seq, h, t);
        rep.exact = expm(cplx(0.0, -t) * gen);
        if (rep.sequenced.unitary_defect() > 1e-9 || rep.exact.unitary_defect() > 1e-9) {
            throw ToleranceError("evolution product lost unitarity");
        }
        rep.error = (rep.sequenced - rep.exact).fro_norm();
        cplx ip = (rep.exact.adjoint() * rep.sequenced).trace();
        if (std::abs(ip) > 0.0) {
            CMat rotated = (std::conj(ip) / std::abs(ip)) * rep.sequenced;
            rep.error_aligned = (rotated - rep.exact).fro_norm();
        } else {
            rep.error_aligned = rep.error;
        }
        out.push_back(std::move(rep));
    }
    for (std::size_t k = 0; k + 1 < out.size(); k++) {
        double next = out[k + 1].error_aligned;
        out[k].scaling_ratio = next > 0.0 ? out[k].error_aligned / next : 0.0;
    }
    return out;
}

}  // namespace

CMat evolve_sequence(const PulseSequence &seq, const Hamiltonian &h, double t) {
    if (seq.dim != h.dim()) {
        throw ValidationError("sequence and Hamiltonian dimensions differ");
    }
    if (!std::isfinite(t) || t <= 0.0) {
        throw ValidationError("evolution time must be positive");
    }
    seq.validate();
    CMat u = CMat::identity(seq.dim);
    for (const auto &p : seq.pulses) {
        u = p.v * u;
        if (p.tau == 0.0) continue;
        u = expm(cplx(0.0, -p.tau * seq.overhead * t) * h.mat()) * u;
    }
    return u;
}

std::vector<EvolutionReport> verify_first_order(const SimulationPlan &plan, double t,
                                                int halvings) {
    if (plan.status != PlanStatus::kSuccess) {
        throw ValidationError("cannot verify an infeasible plan");
    }
    if (plan.residual > 1e-7 * std::max(1.0, plan.h_target.fro_norm())) {
        throw ValidationError("plan residual " + std::to_string(plan.residual) +
                              " is out of tolerance; nothing meaningful to verify");
    }
    if (plan.terms.empty()) {
        throw ValidationError("plan has no terms to verify");
    }
    PulseSequence seq = plan_to_sequence(plan);
    CMat gen = average_hamiltonian(plan, plan.h).mat();
    return scaling_reports(seq, plan.h, gen, t, halvings);
}

std::vector<EvolutionReport> verify_sequence(const PulseSequence &seq,
                                             const Hamiltonian &h, double t,
                                             int halvings) {
    CMat gen = average_hamiltonian(seq, h).mat();
    gen *= seq.overhead;
    return scaling_reports(seq, h, gen, t, halvings);
}

bool reports_pass(const std::vector<EvolutionReport> &reports) {
    if (reports.size() < 2) return false;
    for (std::size_t k = 0; k + 1 < reports.size(); k++) {
        double cur = reports[k].error_aligned;
        double next = reports[k + 1].error_aligned;
        if (cur < 1e-13 && next < 1e-13) continue;
        double ratio = reports[k].scaling_ratio;
        if (ratio < 3.0 || ratio > 5.0) return false;
    }
    return true;
}

bool reports_monotone(const std::vector<EvolutionReport> &reports) {
    for (std::size_t k = 0; k + 1 < reports.size(); k++) {
        double cur = reports[k].error_aligned;
        double next = reports[k + 1].error_aligned;
        if (next < 1e-13) continue;
        if (next > cur * 1.0000001) return false;
    }
    return true;
}

double default_t0(const Hamiltonian &h) {
    double n = h.fro_norm();
    return n > 0.0 ? 0.1 / n : 0.1;
}

}  // namespace hamsim
