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
 * Reference kernels. Plain loops, no intrinsics; every SIMD table is tested
 * against these.
 */
#include "qcnn/sim/kernels.hpp"

namespace qcnn::sim {
namespace {

void apply_matrix_scalar(Amplitude *amps, std::size_t num_qubits,
                         std::size_t target_bit, const Mat2 &m,
                         const ControlCondition *ctrl) {
    const std::size_t stride = std::size_t{1} << target_bit;
    if (ctrl == nullptr) {
        const std::size_t count = std::size_t{1} << (num_qubits - 1);
        for (std::size_t k = 0; k < count; ++k) {
            const std::size_t i0 = detail::insert_zero_bit(k, target_bit);
            const Amplitude a0 = amps[i0];
            const Amplitude a1 = amps[i0 + stride];
            amps[i0] = m[0] * a0 + m[1] * a1;
            amps[i0 + stride] = m[2] * a0 + m[3] * a1;
        }
        return;
    }
    const std::size_t count = std::size_t{1} << (num_qubits - 2);
    const std::size_t ctrl_set = ctrl->value ? std::size_t{1} << ctrl->bit : 0;
    for (std::size_t k = 0; k < count; ++k) {
        const std::size_t i0 =
            detail::insert_two_zero_bits(k, target_bit, ctrl->bit) | ctrl_set;
        const Amplitude a0 = amps[i0];
        const Amplitude a1 = amps[i0 + stride];
        amps[i0] = m[0] * a0 + m[1] * a1;
        amps[i0 + stride] = m[2] * a0 + m[3] * a1;
    }
}

void apply_cnot_scalar(Amplitude *amps, std::size_t num_qubits,
                       std::size_t control_bit, std::size_t target_bit) {
    const std::size_t count = std::size_t{1} << (num_qubits - 2);
    const std::size_t ctrl_set = std::size_t{1} << control_bit;
    const std::size_t stride = std::size_t{1} << target_bit;
    for (std::size_t k = 0; k < count; ++k) {
        const std::size_t i0 =
            detail::insert_two_zero_bits(k, target_bit, control_bit) | ctrl_set;
        std::swap(amps[i0], amps[i0 + stride]);
    }
}

double expectation_z_scalar(const Amplitude *amps, std::size_t num_qubits,
                            std::size_t bit) {
    const std::size_t size = std::size_t{1} << num_qubits;
    double sum = 0.0;
    for (std::size_t i = 0; i < size; ++i) {
        const double p = std::norm(amps[i]);
        sum += ((i >> bit) & 1U) != 0U ? -p : p;
    }
    return sum;
}

double norm_squared_scalar(const Amplitude *amps, std::size_t size) {
    double sum = 0.0;
    for (std::size_t i = 0; i < size; ++i) {
        sum += std::norm(amps[i]);
    }
    return sum;
}

} // namespace

const KernelTable &scalar_kernels() {
    static const KernelTable table{"scalar", apply_matrix_scalar,
                                   apply_cnot_scalar, expectation_z_scalar,
                                   norm_squared_scalar};
    return table;
}

} // namespace qcnn::sim
