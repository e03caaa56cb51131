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

#include "hamsim/su_basis.hpp"

#include <cmath>

#include "hamsim/errors.hpp"

namespace hamsim {

std::vector<CMat> su_basis(std::size_t d) {
    if (d < 1) {
        throw ValidationError("su_basis: d must be >= 1");
    }
    std::vector<CMat> basis;
    basis.reserve(d * d - 1);
    const double fd = static_cast<double>(d);
    double off = std::sqrt(fd / 2.0);
    for (std::size_t j = 0; j < d; j++) {
        for (std::size_t k = j + 1; k < d; k++) {
            CMat m(d);
            m(j, k) = off;
            m(k, j) = off;
            basis.push_back(std::move(m));
        }
    }
    for (std::size_t j = 0; j < d; j++) {
        for (std::size_t k = j + 1; k < d; k++) {
            CMat m(d);
            m(j, k) = cplx{0.0, -off};
            m(k, j) = cplx{0.0, off};
            basis.push_back(std::move(m));
        }
    }
    for (std::size_t l = 1; l < d; l++) {
        CMat m(d);
        double w = std::sqrt(fd / static_cast<double>(l * (l + 1)));
        for (std::size_t j = 0; j < l; j++) {
            m(j, j) = w;
        }
        m(l, l) = -w * static_cast<double>(l);
        basis.push_back(std::move(m));
    }
    return basis;
}

std::vector<double> vec_su(const CMat &h) {
    std::vector<CMat> basis = su_basis(h.dim());
    std::vector<double> x(basis.size());
    for (std::size_t a = 0; a < basis.size(); a++) {
        x[a] = trace_inner(basis[a], h).real();
    }
    return x;
}

CMat unvec_su(const std::vector<double> &x, std::size_t d) {
    if (x.size() != su_dim(d)) {
        throw ValidationError("unvec_su: expected " + std::to_string(su_dim(d)) +
                              " coordinates, got " + std::to_string(x.size()));
    }
    std::vector<CMat> basis = su_basis(d);
    CMat h(d);
    for (std::size_t a = 0; a < basis.size(); a++) {
        if (x[a] == 0.0) {
            continue;
        }
        h += x[a] * basis[a];
    }
    return h;
}

RealMat adjoint_matrix(const CMat &u) {
    const std::size_t d = u.dim();
    std::vector<CMat> basis = su_basis(d);
    const std::size_t m = basis.size();
    RealMat ad(m, m);
    for (std::size_t b = 0; b < m; b++) {
        CMat conj_b = conjugate_by(u, basis[b]);
        for (std::size_t a = 0; a < m; a++) {
            // Real because both basis elements are Hermitian.
            ad(a, b) = trace_inner(basis[a], conj_b).real();
        }
    }
    return ad;
}

}  // namespace hamsim
