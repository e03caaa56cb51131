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

#include "hamsim/kernels.hpp"

namespace hamsim::kernels {
namespace {

void cgemm_scalar(const cplx *a, const cplx *b, cplx *c, std::size_t m, std::size_t k,
                  std::size_t n) {
    // i-p-j order: the inner loop walks contiguous rows of b and c.
    for (std::size_t i = 0; i < m; i++) {
        cplx *crow = c + i * n;
        for (std::size_t p = 0; p < k; p++) {
            cplx aip = a[i * k + p];
            if (aip.real() == 0.0 && aip.imag() == 0.0) {
                continue;  // frames are often permutation-like
            }
            const cplx *brow = b + p * n;
            for (std::size_t j = 0; j < n; j++) {
                crow[j] += aip * brow[j];
            }
        }
    }
}

void caxpy_scalar(cplx alpha, const cplx *x, cplx *y, std::size_t n) {
    for (std::size_t i = 0; i < n; i++) {
        y[i] += alpha * x[i];
    }
}

cplx cdotc_scalar(const cplx *x, const cplx *y, std::size_t n) {
    cplx acc{0.0, 0.0};
    for (std::size_t i = 0; i < n; i++) {
        acc += std::conj(x[i]) * y[i];
    }
    return acc;
}

void cscal_scalar(cplx alpha, cplx *x, std::size_t n) {
    for (std::size_t i = 0; i < n; i++) {
        x[i] *= alpha;
    }
}

}  // namespace

const Backend &scalar_backend() {
    static const Backend backend{"scalar", cgemm_scalar, caxpy_scalar, cdotc_scalar,
                                 cscal_scalar};
    return backend;
}

}  // namespace hamsim::kernels
