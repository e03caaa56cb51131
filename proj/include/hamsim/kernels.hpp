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

#include <complex>
#include <cstddef>

namespace hamsim::kernels {

using cplx = std::complex<double>;

// Low-level dense kernels over interleaved complex<double> buffers. Every
// backend computes the same result up to floating point reassociation; the
// scalar backend is the reference the others are tested against.
struct Backend {
    const char *name;
    // c += a * b, row-major, a is m x k, b is k x n, c is m x n.
    void (*cgemm)(const cplx *a, const cplx *b, cplx *c, std::size_t m, std::size_t k,
                  std::size_t n);
    // y += alpha * x.
    void (*caxpy)(cplx alpha, const cplx *x, cplx *y, std::size_t n);
    // sum_i conj(x[i]) * y[i].
    cplx (*cdotc)(const cplx *x, const cplx *y, std::size_t n);
    // x *= alpha.
    void (*cscal)(cplx alpha, cplx *x, std::size_t n);
};

const Backend &scalar_backend();

// nullptr when the CPU (or the build target) has no AVX2+FMA.
const Backend *avx2_backend();

// Backend selected at first use: AVX2 when available, otherwise scalar.
// Environment variable HAMSIM_KERNELS=scalar|avx2 forces the choice (an
// unsatisfiable request falls back to scalar).
const Backend &active_backend();

}  // namespace hamsim::kernels
