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

#include "hamsim/rng.hpp"

#include "hamsim/eig.hpp"

namespace hamsim {

Hamiltonian random_hamiltonian(std::size_t d, Rng &rng) {
    CMat g(d);
    for (std::size_t i = 0; i < d; i++) {
        for (std::size_t j = 0; j < d; j++) {
            g(i, j) = cplx{rng.gauss(), rng.gauss()};
        }
    }
    CMat h = g + g.adjoint();
    h *= 0.5;
    cplx shift = h.trace() / static_cast<double>(d);
    for (std::size_t i = 0; i < d; i++) {
        h(i, i) -= shift;
    }
    return Hamiltonian(std::move(h));
}

CMat random_density(std::size_t d, Rng &rng) {
    CMat g(d);
    for (std::size_t i = 0; i < d; i++) {
        for (std::size_t j = 0; j < d; j++) {
            g(i, j) = cplx{rng.gauss(), rng.gauss()};
        }
    }
    CMat rho = g.adjoint() * g;
    double tr = rho.trace().real();
    rho *= 1.0 / tr;
    return rho;
}

CMat random_unitary(std::size_t d, Rng &rng) {
    Hamiltonian h = random_hamiltonian(d, rng);
    return h.eigenvectors();
}

}  // namespace hamsim
