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

#if defined(__x86_64__) || defined(__i386__)

#include <immintrin.h>

// Interleaved complex<double> layout: one __m256d holds two complex numbers
// as [re0, im0, re1, im1]. Complex products use the permute + fmaddsub trick:
// with t = swap(x) * broadcast(im) the fused even-subtract/odd-add of
// x * broadcast(re) yields [re(x*a), im(x*a)] per lane pair.

namespace hamsim::kernels {
namespace {

#define HAMSIM_AVX2 __attribute__((target("avx2,fma")))

HAMSIM_AVX2 inline __m256d cmul_acc(__m256d acc, __m256d x, __m256d yr, __m256d yi) {
    __m256d xswap = _mm256_permute_pd(x, 0x5);
    __m256d t = _mm256_mul_pd(xswap, yi);
    return _mm256_add_pd(acc, _mm256_fmaddsub_pd(x, yr, t));
}

HAMSIM_AVX2 void caxpy_avx2(cplx alpha, const cplx *x, cplx *y, std::size_t n) {
    const double *xd = reinterpret_cast<const double *>(x);
    double *yd = reinterpret_cast<double *>(y);
    __m256d ar = _mm256_set1_pd(alpha.real());
    __m256d ai = _mm256_set1_pd(alpha.imag());
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d xv = _mm256_loadu_pd(xd + 2 * i);
        __m256d yv = _mm256_loadu_pd(yd + 2 * i);
        _mm256_storeu_pd(yd + 2 * i, cmul_acc(yv, xv, ar, ai));
    }
    for (; i < n; i++) {
        y[i] += alpha * x[i];
    }
}

HAMSIM_AVX2 void cgemm_avx2(const cplx *a, const cplx *b, cplx *c, std::size_t m,
                            std::size_t k, std::size_t n) {
    const double *bd = reinterpret_cast<const double *>(b);
    double *cd = reinterpret_cast<double *>(c);
    for (std::size_t i = 0; i < m; i++) {
        double *crow = cd + 2 * i * n;
        for (std::size_t p = 0; p < k; p++) {
            cplx aip = a[i * k + p];
            if (aip.real() == 0.0 && aip.imag() == 0.0) {
                continue;
            }
            __m256d ar = _mm256_set1_pd(aip.real());
            __m256d ai = _mm256_set1_pd(aip.imag());
            const double *brow = bd + 2 * p * n;
            std::size_t j = 0;
            for (; j + 2 <= n; j += 2) {
                __m256d bv = _mm256_loadu_pd(brow + 2 * j);
                __m256d cv = _mm256_loadu_pd(crow + 2 * j);
                _mm256_storeu_pd(crow + 2 * j, cmul_acc(cv, bv, ar, ai));
            }
            for (; j < n; j++) {
                c[i * n + j] += aip * b[p * n + j];
            }
        }
    }
}

HAMSIM_AVX2 cplx cdotc_avx2(const cplx *x, const cplx *y, std::size_t n) {
    const double *xd = reinterpret_cast<const double *>(x);
    const double *yd = reinterpret_cast<const double *>(y);
    // conj(x)*y: negate the imaginary lanes of x, then a plain complex product.
    __m256d signs = _mm256_setr_pd(0.0, -0.0, 0.0, -0.0);
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d xv = _mm256_xor_pd(_mm256_loadu_pd(xd + 2 * i), signs);
        __m256d yv = _mm256_loadu_pd(yd + 2 * i);
        __m256d yr = _mm256_movedup_pd(yv);
        __m256d yi = _mm256_permute_pd(yv, 0xF);
        acc = cmul_acc(acc, xv, yr, yi);
    }
    __m128d lo = _mm256_castpd256_pd128(acc);
    __m128d hi = _mm256_extractf128_pd(acc, 1);
    __m128d s = _mm_add_pd(lo, hi);
    alignas(16) double out[2];
    _mm_store_pd(out, s);
    cplx acc_s{out[0], out[1]};
    for (; i < n; i++) {
        acc_s += std::conj(x[i]) * y[i];
    }
    return acc_s;
}

HAMSIM_AVX2 void cscal_avx2(cplx alpha, cplx *x, std::size_t n) {
    double *xd = reinterpret_cast<double *>(x);
    __m256d ar = _mm256_set1_pd(alpha.real());
    __m256d ai = _mm256_set1_pd(alpha.imag());
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        __m256d xv = _mm256_loadu_pd(xd + 2 * i);
        _mm256_storeu_pd(xd + 2 * i, cmul_acc(_mm256_setzero_pd(), xv, ar, ai));
    }
    for (; i < n; i++) {
        x[i] *= alpha;
    }
}

#undef HAMSIM_AVX2

}  // namespace

const Backend *avx2_backend() {
    static const Backend backend{"avx2", cgemm_avx2, caxpy_avx2, cdotc_avx2, cscal_avx2};
    static const bool supported =
        __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
    return supported ? &backend : nullptr;
}

}  // namespace hamsim::kernels

#else  // non-x86 build: no AVX2 variant.

namespace hamsim::kernels {
const Backend *avx2_backend() {
    return nullptr;
}
}  // namespace hamsim::kernels

#endif
