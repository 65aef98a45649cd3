// Copyright 2026 The qcnn-reupload Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * AVX2/FMA kernels. Functions carry a target attribute instead of the whole
 * file being built with -mavx2, so inline code shared with the scalar path is
 * never emitted with AVX2 encodings. Only reachable after the runtime CPU
 * check in dispatch.cpp.
 *
 * A __m256d holds two complex amplitudes (re0, im0, re1, im1). Kernels work on
 * two independent base indices per iteration, gathering each 128-bit
 * amplitude separately, so one code path covers every target/control layout.
 */
#include "qcnn/sim/kernels.hpp"

#include <immintrin.h>

#define QCNN_AVX2 __attribute__((target("avx2,fma")))

namespace qcnn::sim::avx2 {
namespace {

QCNN_AVX2 inline __m256d load_pair(const Amplitude *lo, const Amplitude *hi) {
    const __m128d a = _mm_loadu_pd(reinterpret_cast<const double *>(lo));
    const __m128d b = _mm_loadu_pd(reinterpret_cast<const double *>(hi));
    return _mm256_insertf128_pd(_mm256_castpd128_pd256(a), b, 1);
}

QCNN_AVX2 inline void store_pair(Amplitude *lo, Amplitude *hi, __m256d v) {
    _mm_storeu_pd(reinterpret_cast<double *>(lo), _mm256_castpd256_pd128(v));
    _mm_storeu_pd(reinterpret_cast<double *>(hi), _mm256_extractf128_pd(v, 1));
}

struct BroadcastComplex {
    __m256d re;
    __m256d im;
    QCNN_AVX2 explicit BroadcastComplex(Amplitude z)
        : re(_mm256_set1_pd(z.real())), im(_mm256_set1_pd(z.imag())) {}
};

// z * v for both lanes: (zr*vr - zi*vi, zr*vi + zi*vr).
QCNN_AVX2 inline __m256d cmul(const BroadcastComplex &z, __m256d v) {
    const __m256d swapped = _mm256_permute_pd(v, 0b0101);
    return _mm256_fmaddsub_pd(z.re, v, _mm256_mul_pd(z.im, swapped));
}

QCNN_AVX2 inline void rotate_pairs(Amplitude *amps, std::size_t i0, std::size_t j0,
                         std::size_t stride, const BroadcastComplex (&m)[4]) {
    const __m256d lo = load_pair(amps + i0, amps + j0);
    const __m256d hi = load_pair(amps + i0 + stride, amps + j0 + stride);
    const __m256d new_lo = _mm256_add_pd(cmul(m[0], lo), cmul(m[1], hi));
    const __m256d new_hi = _mm256_add_pd(cmul(m[2], lo), cmul(m[3], hi));
    store_pair(amps + i0, amps + j0, new_lo);
    store_pair(amps + i0 + stride, amps + j0 + stride, new_hi);
}

template <class IndexFn>
QCNN_AVX2 void apply_matrix_loop(Amplitude *amps, std::size_t count, std::size_t stride,
                       const Mat2 &mat, IndexFn base_index) {
    const BroadcastComplex m[4] = {BroadcastComplex(mat[0]), BroadcastComplex(mat[1]),
                                   BroadcastComplex(mat[2]), BroadcastComplex(mat[3])};
    std::size_t k = 0;
    for (; k + 1 < count; k += 2) {
        rotate_pairs(amps, base_index(k), base_index(k + 1), stride, m);
    }
    if (k < count) {
        const std::size_t i0 = base_index(k);
        const Amplitude a0 = amps[i0];
        const Amplitude a1 = amps[i0 + stride];
        amps[i0] = mat[0] * a0 + mat[1] * a1;
        amps[i0 + stride] = mat[2] * a0 + mat[3] * a1;
    }
}

QCNN_AVX2 void apply_matrix_avx2(Amplitude *amps, std::size_t num_qubits,
                       std::size_t target_bit, const Mat2 &m,
                       const ControlCondition *ctrl) {
    const std::size_t stride = std::size_t{1} << target_bit;
    if (ctrl == nullptr) {
        apply_matrix_loop(amps, std::size_t{1} << (num_qubits - 1), stride, m,
                          [target_bit](std::size_t k) {
                              return detail::insert_zero_bit(k, target_bit);
                          });
        return;
    }
    const std::size_t ctrl_bit = ctrl->bit;
    const std::size_t ctrl_set = ctrl->value ? std::size_t{1} << ctrl_bit : 0;
    apply_matrix_loop(amps, std::size_t{1} << (num_qubits - 2), stride, m,
                      [=](std::size_t k) {
                          return detail::insert_two_zero_bits(k, target_bit, ctrl_bit) |
                                 ctrl_set;
                      });
}

QCNN_AVX2 void apply_cnot_avx2(Amplitude *amps, std::size_t num_qubits,
                     std::size_t control_bit, std::size_t target_bit) {
    const std::size_t count = std::size_t{1} << (num_qubits - 2);
    const std::size_t ctrl_set = std::size_t{1} << control_bit;
    const std::size_t stride = std::size_t{1} << target_bit;
    auto base = [=](std::size_t k) {
        return detail::insert_two_zero_bits(k, target_bit, control_bit) | ctrl_set;
    };
    std::size_t k = 0;
    for (; k + 1 < count; k += 2) {
        const std::size_t i0 = base(k);
        const std::size_t j0 = base(k + 1);
        const __m256d lo = load_pair(amps + i0, amps + j0);
        const __m256d hi = load_pair(amps + i0 + stride, amps + j0 + stride);
        store_pair(amps + i0, amps + j0, hi);
        store_pair(amps + i0 + stride, amps + j0 + stride, lo);
    }
    if (k < count) {
        const std::size_t i0 = base(k);
        std::swap(amps[i0], amps[i0 + stride]);
    }
}

QCNN_AVX2 inline double horizontal_sum(__m256d v) {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d s = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

QCNN_AVX2 double expectation_z_avx2(const Amplitude *amps, std::size_t num_qubits,
                          std::size_t bit) {
    const std::size_t size = std::size_t{1} << num_qubits;
    const auto *data = reinterpret_cast<const double *>(amps);
    if (bit == 0) {
        // Even index has the bit clear, odd index has it set.
        const __m256d sign = _mm256_setr_pd(1.0, 1.0, -1.0, -1.0);
        __m256d acc = _mm256_setzero_pd();
        for (std::size_t i = 0; i < size; i += 2) {
            const __m256d v = _mm256_loadu_pd(data + 2 * i);
            acc = _mm256_fmadd_pd(_mm256_mul_pd(v, v), sign, acc);
        }
        return horizontal_sum(acc);
    }
    // Indices i and i+1 share every bit above 0, so each pair has one sign.
    __m256d pos = _mm256_setzero_pd();
    __m256d neg = _mm256_setzero_pd();
    for (std::size_t i = 0; i < size; i += 2) {
        const __m256d v = _mm256_loadu_pd(data + 2 * i);
        if (((i >> bit) & 1U) != 0U) {
            neg = _mm256_fmadd_pd(v, v, neg);
        } else {
            pos = _mm256_fmadd_pd(v, v, pos);
        }
    }
    return horizontal_sum(pos) - horizontal_sum(neg);
}

QCNN_AVX2 double norm_squared_avx2(const Amplitude *amps, std::size_t size) {
    const auto *data = reinterpret_cast<const double *>(amps);
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 1 < size; i += 2) {
        const __m256d v = _mm256_loadu_pd(data + 2 * i);
        acc = _mm256_fmadd_pd(v, v, acc);
    }
    double sum = horizontal_sum(acc);
    for (; i < size; ++i) {
        sum += std::norm(amps[i]);
    }
    return sum;
}

} // namespace

const KernelTable &table() {
    static const KernelTable t{"avx2", apply_matrix_avx2, apply_cnot_avx2,
                               expectation_z_avx2, norm_squared_avx2};
    return t;
}

} // namespace qcnn::sim::avx2
