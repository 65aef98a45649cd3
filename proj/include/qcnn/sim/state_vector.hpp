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
 * Dense pure-state simulator for up to 16 qubits.
 *
 * Qubit k maps to bit (num_qubits - 1 - k) of the basis index, so qubit 0 is
 * the most significant bit and |b0 b1 ... b_{n-1}> has index
 * sum_k b_k * 2^(n-1-k).
 */
#pragma once

#include "qcnn/sim/gates.hpp"
#include "qcnn/sim/kernels.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace qcnn::sim {

inline constexpr std::size_t kMaxQubits = 16;

class StateVector {
  public:
    /// |0...0> on @p num_qubits qubits. Throws SizeError outside [1, 16].
    static StateVector zero(std::size_t num_qubits);

    /// Wraps explicit amplitudes; the length must be 2^n with n in [1, 16].
    /// Normalisation is the caller's responsibility.
    static StateVector from_amplitudes(std::vector<Amplitude> amplitudes);

    [[nodiscard]] std::size_t num_qubits() const { return num_qubits_; }
    [[nodiscard]] std::size_t size() const { return amps_.size(); }
    [[nodiscard]] std::span<const Amplitude> amplitudes() const { return amps_; }
    [[nodiscard]] const Amplitude &operator[](std::size_t i) const { return amps_[i]; }

    void apply_rx(std::size_t qubit, double theta);
    void apply_ry(std::size_t qubit, double theta);
    void apply_rz(std::size_t qubit, double theta);
    void apply_cnot(std::size_t control, std::size_t target);

    /// Rotates @p target only on basis states where @p control reads
    /// @p control_value.
    void apply_controlled_rot(std::size_t control, std::size_t target,
                              Axis axis, double theta, bool control_value);

    void apply(const GateSpec &gate);

    /// <Z> on @p qubit, in [-1, 1].
    [[nodiscard]] double expectation_z(std::size_t qubit) const;

    [[nodiscard]] double norm_squared() const;

    /// Bit position of @p qubit in the basis index.
    [[nodiscard]] std::size_t bit_of(std::size_t qubit) const {
        return num_qubits_ - 1 - qubit;
    }

    /// Uses a specific kernel table instead of active_kernels().
    void use_kernels(const KernelTable &table) { kernels_ = &table; }
    [[nodiscard]] const KernelTable &kernels() const { return *kernels_; }

  private:
    StateVector(std::size_t num_qubits, std::vector<Amplitude> amps);

    void check_qubit(std::size_t qubit) const;
    void check_pair(std::size_t control, std::size_t target) const;
    void apply_single(std::size_t qubit, const Mat2 &m);

    std::size_t num_qubits_;
    std::vector<Amplitude> amps_;
    const KernelTable *kernels_;
};

/**
 * Verification oracle: builds the reduced density matrix by explicit partial
 * trace over @p traced_qubits and returns Tr(rho_reduced Z_qubit).
 *
 * Memory grows as 4^(n - |traced|); intended for small test states.
 * Throws SizeError if @p qubit is traced or any index is out of range.
 */
double reduced_expectation_oracle(const StateVector &state, std::size_t qubit,
                                  std::span<const std::size_t> traced_qubits);

} // namespace qcnn::sim
