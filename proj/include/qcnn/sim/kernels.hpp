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
 * Low-level amplitude kernels.
 *
 * Every kernel comes in a scalar reference implementation and, on x86-64, an
 * AVX2/FMA implementation. The active table is chosen once at runtime from
 * CPU features; set QCNN_KERNELS=scalar to force the reference path.
 *
 * Kernels address qubits by bit position in the basis index (bit 0 is the
 * least significant bit). The qubit-number convention lives in StateVector.
 */
#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <string_view>
#include <vector>

namespace qcnn::sim {

using Amplitude = std::complex<double>;

/// Row-major 2x2 complex matrix {m00, m01, m10, m11}.
using Mat2 = std::array<Amplitude, 4>;

/// Restricts a kernel to basis states whose control bit equals a value.
struct ControlCondition {
    std::size_t bit;
    bool value;
};

struct KernelTable {
    std::string_view name;

    /// Applies @p m to bit @p target_bit, optionally only where the control
    /// condition holds. @p ctrl may be nullptr.
    void (*apply_matrix)(Amplitude *amps, std::size_t num_qubits,
                         std::size_t target_bit, const Mat2 &m,
                         const ControlCondition *ctrl);

    /// Flips @p target_bit on basis states where @p control_bit is set.
    void (*apply_cnot)(Amplitude *amps, std::size_t num_qubits,
                       std::size_t control_bit, std::size_t target_bit);

    /// Sum of |a_i|^2 weighted by +1 (bit clear) or -1 (bit set).
    double (*expectation_z)(const Amplitude *amps, std::size_t num_qubits,
                            std::size_t bit);

    double (*norm_squared)(const Amplitude *amps, std::size_t size);
};

enum class KernelKind { Scalar, Avx2 };

const KernelTable &scalar_kernels();

/// AVX2 table, or nullptr when not compiled in or not supported by this CPU.
const KernelTable *avx2_kernels();

/// Table used by StateVector. Resolved once; honours QCNN_KERNELS.
const KernelTable &active_kernels();

/// Every table runnable on this machine, reference first.
std::vector<const KernelTable *> available_kernels();

namespace detail {
/// Inserts a zero bit at position @p bit, shifting higher bits up.
constexpr std::size_t insert_zero_bit(std::size_t value, std::size_t bit) {
    const std::size_t low = value & ((std::size_t{1} << bit) - 1);
    return ((value >> bit) << (bit + 1)) | low;
}

/// Base index with zero bits at both positions (order independent).
constexpr std::size_t insert_two_zero_bits(std::size_t value, std::size_t bit_a,
                                           std::size_t bit_b) {
    const std::size_t lo = bit_a < bit_b ? bit_a : bit_b;
    const std::size_t hi = bit_a < bit_b ? bit_b : bit_a;
    return insert_zero_bit(insert_zero_bit(value, lo), hi);
}
} // namespace detail

} // namespace qcnn::sim
