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

#include "hamsim/eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "hamsim/errors.hpp"

namespace hamsim {

namespace {

double off_diag_norm(const CMat &a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.dim(); i++) {
        for (std::size_t j = 0; j < a.dim(); j++) {
            if (i != j) {
                s += std::norm(a(i, j));
            }
        }
    }
    return std::sqrt(s);
}

}  // namespace

EigResult hermitian_eig_matrix(const CMat &h) {
    const std::size_t d = h.dim();
    if (d == 0) {
        throw ValidationError("hermitian_eig: empty matrix");
    }
    if (h.hermitian_defect() > 1e-8 * std::max(1.0, h.fro_norm())) {
        throw ValidationError("hermitian_eig: matrix is not Hermitian");
    }
    CMat a = h;
    CMat v = CMat::identity(d);
    const double target = 1e-12 * std::max(h.fro_norm(), 1e-300);

    const int max_sweeps = 100;
    int sweep = 0;
    while (off_diag_norm(a) > target) {
        if (++sweep > max_sweeps) {
            throw ToleranceError("hermitian_eig: no convergence after 100 sweeps");
        }
        for (std::size_t p = 0; p + 1 < d; p++) {
            for (std::size_t q = p + 1; q < d; q++) {
                cplx apq = a(p, q);
                double r = std::abs(apq);
                if (r <= 1e-300) {
                    continue;
                }
                // Phase out the pivot, then a plain real Jacobi rotation
                // (Rutishauser's stable root for tan θ).
                cplx e = apq / r;
                double app = a(p, p).real();
                double aqq = a(q, q).real();
                double tau = (aqq - app) / (2.0 * r);
                double t = (tau >= 0.0 ? 1.0 : -1.0) /
                           (std::abs(tau) + std::sqrt(tau * tau + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                cplx ce = c * e, se = s * e;

                // A <- J†AJ, J differs from I only in columns p and q:
                // J(p,p)=c·e, J(p,q)=s·e, J(q,p)=-s, J(q,q)=c.
                for (std::size_t i = 0; i < d; i++) {
                    cplx aip = a(i, p), aiq = a(i, q);
                    a(i, p) = ce * aip - s * aiq;
                    a(i, q) = se * aip + c * aiq;
                }
                cplx ec = std::conj(e);
                for (std::size_t j = 0; j < d; j++) {
                    cplx apj = a(p, j), aqj = a(q, j);
                    a(p, j) = c * ec * apj - s * aqj;
                    a(q, j) = s * ec * apj + c * aqj;
                }
                for (std::size_t i = 0; i < d; i++) {
                    cplx vip = v(i, p), viq = v(i, q);
                    v(i, p) = ce * vip - s * viq;
                    v(i, q) = se * vip + c * viq;
                }
                a(p, q) = cplx{0.0, 0.0};
                a(q, p) = cplx{0.0, 0.0};
            }
        }
    }

    std::vector<double> diag(d);
    for (std::size_t i = 0; i < d; i++) {
        diag[i] = a(i, i).real();
    }
    // Non-increasing order; stable sort keeps original index order on ties, so
    // degenerate spectra still produce deterministic output.
    std::vector<std::size_t> order(d);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return diag[i] > diag[j]; });

    EigResult res;
    res.values.resize(d);
    res.vectors = CMat(d);
    for (std::size_t k = 0; k < d; k++) {
        res.values[k] = diag[order[k]];
        for (std::size_t i = 0; i < d; i++) {
            res.vectors(i, k) = v(i, order[k]);
        }
    }
    return res;
}

RealEigResult symmetric_eig(const RealMat &s) {
    if (s.rows() != s.cols()) {
        throw ValidationError("symmetric_eig: matrix not square");
    }
    const std::size_t n = s.rows();
    CMat c(n);
    for (std::size_t i = 0; i < n; i++) {
        for (std::size_t j = 0; j < n; j++) {
            // Symmetrize on the way in; callers pass Gram-type matrices whose
            // asymmetry is pure roundoff.
            c(i, j) = 0.5 * (s(i, j) + s(j, i));
        }
    }
    EigResult er = hermitian_eig_matrix(c);
    RealEigResult res;
    res.values = std::move(er.values);
    res.vectors = RealMat(n, n);
    for (std::size_t i = 0; i < n; i++) {
        for (std::size_t j = 0; j < n; j++) {
            res.vectors(i, j) = er.vectors(i, j).real();
        }
    }
    return res;
}

}  // namespace hamsim
