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

#include "hamsim/error_basis.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "hamsim/errors.hpp"

namespace hamsim {

namespace {

// Rebuilds controls from a frame walk: V_i = U_i * U_{i-1}^dag with U_0 = I.
PulseSequence sequence_from_frames(std::size_t d, const std::vector<CMat> &frames,
                                   const std::vector<double> &taus, double overhead,
                                   bool cyclic) {
    PulseSequence seq;
    seq.dim = d;
    seq.overhead = overhead;
    seq.cyclic = cyclic;
    seq.pulses.reserve(frames.size());
    CMat prev = CMat::identity(d);
    for (std::size_t i = 0; i < frames.size(); i++) {
        seq.pulses.push_back({frames[i] * prev.adjoint(), taus[i]});
        prev = frames[i];
    }
    return seq;
}

}  // namespace

const CMat &NiceErrorBasis::at(std::size_t i, std::size_t j) const {
    return matrices[(i % dim) * dim + (j % dim)];
}

cplx NiceErrorBasis::factor(std::size_t i, std::size_t j, std::size_t k,
                            std::size_t l) const {
    (void)i;
    (void)l;
    double jk = static_cast<double>((j % dim) * (k % dim));
    return std::polar(1.0, -2.0 * std::numbers::pi * jk / static_cast<double>(dim));
}

NiceErrorBasis heisenberg_basis(std::size_t d) {
    if (d < 2) {
        throw ValidationError("error basis needs dimension >= 2, got " +
                              std::to_string(d));
    }
    NiceErrorBasis b;
    b.dim = d;
    double step = 2.0 * std::numbers::pi / static_cast<double>(d);
    b.omega = std::polar(1.0, step);
    b.s = CMat(d);
    b.t = CMat(d);
    for (std::size_t r = 0; r < d; r++) {
        b.s(r, (r + 1) % d) = 1.0;
        b.t(r, r) = std::polar(1.0, step * static_cast<double>(r));
    }
    b.matrices.reserve(d * d);
    for (std::size_t i = 0; i < d; i++) {
        for (std::size_t j = 0; j < d; j++) {
            // (S^i T^j)[r][c] = w^{jc} when c = r+i mod d. Built from the
            // closed form so no phase drift accumulates across powers.
            CMat u(d);
            for (std::size_t r = 0; r < d; r++) {
                std::size_t c = (r + i) % d;
                u(r, c) = std::polar(1.0, step * static_cast<double>(j * c));
            }
            b.matrices.push_back(u);
        }
    }
    return b;
}

PulseSequence annihilator_sequence(const NiceErrorBasis &basis) {
    std::size_t d = basis.dim;
    std::size_t n = d * d;
    std::vector<CMat> frames;
    frames.reserve(n);
    for (std::size_t g = 1; g < n; g++) frames.push_back(basis.matrices[g]);
    frames.push_back(basis.matrices[0]);  // identity last: cyclic for free
    std::vector<double> taus(n, 1.0 / static_cast<double>(n));
    return sequence_from_frames(d, frames, taus, 1.0, true);
}

PulseSequence inversion_sequence(const NiceErrorBasis &basis) {
    std::size_t d = basis.dim;
    std::size_t n = d * d - 1;
    std::vector<CMat> frames;
    frames.reserve(n + 1);
    for (std::size_t g = 1; g <= n; g++) frames.push_back(basis.matrices[g]);
    std::vector<double> taus(n, 1.0 / static_cast<double>(n));
    // Weightless closing pulse: the non-identity frames alone cannot compose
    // to I, so return to the identity explicitly.
    frames.push_back(CMat::identity(d));
    taus.push_back(0.0);
    return sequence_from_frames(d, frames, taus, static_cast<double>(n), true);
}

double inversion_lower_bound(const Hamiltonian &h) {
    if (h.is_zero()) {
        throw ValidationError("inversion lower bound is undefined for H = 0");
    }
    const auto &spec = h.spectrum();
    double r = spec.front();
    double q = spec.back();
    return r / (-q);
}

Hamiltonian decouple(const NiceErrorBasis &basis, const Hamiltonian &h_joint) {
    std::size_t ds = basis.dim;
    std::size_t dj = h_joint.dim();
    if (dj % ds != 0) {
        throw ValidationError("joint dimension " + std::to_string(dj) +
                              " does not factor over system dimension " +
                              std::to_string(ds));
    }
    std::size_t db = dj / ds;
    CMat eye_b = CMat::identity(db);
    CMat acc(dj);
    for (const auto &u : basis.matrices) {
        acc += conjugate_by(kron(u, eye_b), h_joint.mat());
    }
    acc *= 1.0 / static_cast<double>(ds * ds);
    return Hamiltonian(acc);
}

PulseSequence cyclic_switch_off(const Hamiltonian &h) {
    if (h.is_zero()) {
        throw ValidationError("cannot build a switch-off sequence for H = 0");
    }
    std::size_t d = h.dim();
    CMat shift(d);
    for (std::size_t r = 0; r < d; r++) shift(r, (r + 1) % d) = 1.0;
    const CMat &w = h.eigenvectors();
    CMat v = w * shift * w.adjoint();
    // Frames are W S^j W^dag for j = 1..d; the d-th lands on the identity.
    PulseSequence seq;
    seq.dim = d;
    seq.overhead = 1.0;
    seq.cyclic = true;
    seq.pulses.assign(d, {v, 1.0 / static_cast<double>(d)});
    return seq;
}

}  // namespace hamsim
