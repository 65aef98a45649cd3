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
 * Circuit building blocks and the forward pass.
 */
#pragma once

#include "qcnn/model/architecture.hpp"
#include "qcnn/sim/state_vector.hpp"

#include <numbers>
#include <span>
#include <vector>

namespace qcnn::model {

inline constexpr double kMaxFeature = std::numbers::pi / 2.0;

/// Flat angle vector in the layout described in architecture.hpp.
struct ParameterVector {
    std::vector<double> angles;

    [[nodiscard]] std::size_t size() const { return angles.size(); }
    [[nodiscard]] std::span<const double> view() const { return angles; }
};

/// RY(2 x_i) on qubit q_i. Features must lie in [0, pi/2].
void encode(sim::StateVector &state, std::span<const std::size_t> qubits,
            std::span<const double> features);

/// Two-qubit conv gates on adjacent pairs: sublayer A (q0,q1),(q2,q3),...
/// then sublayer B (q1,q2),(q3,q4),... Each gate is RY(t1) x RY(t2) then
/// CNOT first -> second. @p params has length 2(w - 1).
void conv_layer(sim::StateVector &state, std::span<const std::size_t> active,
                std::span<const double> params);

/// Pooling on pairs (q_{2i}, q_{2i+1}): controlled-RZ(t1) when the control
/// reads 1, controlled-RX(t2) when it reads 0. Returns the survivors
/// q_{2i+1}; controls are never touched again. @p params has length w.
std::vector<std::size_t> pool_layer(sim::StateVector &state,
                                    std::span<const std::size_t> active,
                                    std::span<const double> params);

struct Prediction {
    double expectation = 0.0; ///< <Z> on the survivor
    double p0 = 0.0;          ///< (1 + z) / 2
    double p1 = 0.0;          ///< (1 - z) / 2, the class-1 probability
};

/// Runs the full circuit from |0...0> and returns the final state.
sim::StateVector run_circuit(const Architecture &arch,
                             std::span<const double> params,
                             std::span<const double> features);

Prediction forward(const Architecture &arch, std::span<const double> params,
                   std::span<const double> features);

/// Pooling control qubits of every layer, i.e. the qubits traced out.
std::vector<std::size_t> traced_qubits(const Architecture &arch);

} // namespace qcnn::model
