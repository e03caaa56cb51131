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

#include <cstdint>
#include <random>

#include "hamsim/hamiltonian.hpp"
#include "hamsim/matrix.hpp"

namespace hamsim {

struct Rng {
    explicit Rng(std::uint64_t seed) : eng(seed) {}
    double gauss() { return normal(eng); }
    double uniform() { return unif(eng); }
    std::size_t index(std::size_t n) {
        return std::uniform_int_distribution<std::size_t>(0, n - 1)(eng);
    }

    std::mt19937_64 eng;
    std::normal_distribution<double> normal{0.0, 1.0};
    std::uniform_real_distribution<double> unif{0.0, 1.0};
};

// GUE-style random element of su(d).
Hamiltonian random_hamiltonian(std::size_t d, Rng &rng);

// Random density matrix G†G / tr(G†G), G complex Gaussian.
CMat random_density(std::size_t d, Rng &rng);

// Haar-ish random unitary (eigenbasis of a random Hermitian matrix; good
// enough for test coverage, not calibrated for Haar measure).
CMat random_unitary(std::size_t d, Rng &rng);

}  // namespace hamsim
