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
 * Gate descriptions and their 2x2 matrices. Rotations follow
 * R_A(theta) = exp(-i theta A / 2).
 */
#pragma once

#include "qcnn/sim/kernels.hpp"

#include <cstddef>
#include <optional>

namespace qcnn::sim {

enum class Axis { X, Y, Z };

enum class GateKind { RX, RY, RZ, CNOT, ControlledRot };

Mat2 rotation_matrix(Axis axis, double theta);

/// A single gate application. Qubit indices use the StateVector convention.
struct GateSpec {
    GateKind kind;
    std::size_t qubit0;               ///< target, or control for two-qubit gates
    std::optional<std::size_t> qubit1; ///< target for CNOT / ControlledRot
    double angle = 0.0;
    Axis axis = Axis::Z;      ///< ControlledRot only
    bool control_value = true; ///< ControlledRot only

    static GateSpec rx(std::size_t q, double theta) { return {GateKind::RX, q, std::nullopt, theta}; }
    static GateSpec ry(std::size_t q, double theta) { return {GateKind::RY, q, std::nullopt, theta}; }
    static GateSpec rz(std::size_t q, double theta) { return {GateKind::RZ, q, std::nullopt, theta}; }
    static GateSpec cnot(std::size_t control, std::size_t target) {
        return {GateKind::CNOT, control, target};
    }
    static GateSpec controlled_rot(std::size_t control, std::size_t target,
                                   Axis axis, double theta, bool control_value) {
        return {GateKind::ControlledRot, control, target, theta, axis, control_value};
    }
};

} // namespace qcnn::sim
