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

#include "qcnn/sim/state_vector.hpp"

#include "qcnn/core/error.hpp"

#include <string>
#include <utility>

namespace qcnn::sim {

StateVector::StateVector(std::size_t num_qubits, std::vector<Amplitude> amps)
    : num_qubits_(num_qubits), amps_(std::move(amps)),
      kernels_(&active_kernels()) {}

StateVector StateVector::zero(std::size_t num_qubits) {
    if (num_qubits < 1 || num_qubits > kMaxQubits) {
        throw SizeError("StateVector: num_qubits must be in [1, 16], got " +
                        std::to_string(num_qubits));
    }
    std::vector<Amplitude> amps(std::size_t{1} << num_qubits);
    amps[0] = 1.0;
    return {num_qubits, std::move(amps)};
}

StateVector StateVector::from_amplitudes(std::vector<Amplitude> amplitudes) {
    const std::size_t len = amplitudes.size();
    std::size_t n = 0;
    while ((std::size_t{1} << n) < len) {
        ++n;
    }
    if (len < 2 || (std::size_t{1} << n) != len || n > kMaxQubits) {
        throw SizeError("StateVector: amplitude count must be 2^n with n in [1, 16]");
    }
    return {n, std::move(amplitudes)};
}

void StateVector::check_qubit(std::size_t qubit) const {
    if (qubit >= num_qubits_) {
        throw SizeError("qubit index " + std::to_string(qubit) +
                        " out of range for " + std::to_string(num_qubits_) +
                        "-qubit state");
    }
}

void StateVector::check_pair(std::size_t control, std::size_t target) const {
    check_qubit(control);
    check_qubit(target);
    if (control == target) {
        throw SizeError("control and target must differ (both " +
                        std::to_string(control) + ")");
    }
}

void StateVector::apply_single(std::size_t qubit, const Mat2 &m) {
    check_qubit(qubit);
    kernels_->apply_matrix(amps_.data(), num_qubits_, bit_of(qubit), m, nullptr);
}

void StateVector::apply_rx(std::size_t qubit, double theta) {
    apply_single(qubit, rotation_matrix(Axis::X, theta));
}

void StateVector::apply_ry(std::size_t qubit, double theta) {
    apply_single(qubit, rotation_matrix(Axis::Y, theta));
}

void StateVector::apply_rz(std::size_t qubit, double theta) {
    apply_single(qubit, rotation_matrix(Axis::Z, theta));
}

void StateVector::apply_cnot(std::size_t control, std::size_t target) {
    check_pair(control, target);
    kernels_->apply_cnot(amps_.data(), num_qubits_, bit_of(control), bit_of(target));
}

void StateVector::apply_controlled_rot(std::size_t control, std::size_t target,
                                       Axis axis, double theta,
                                       bool control_value) {
    check_pair(control, target);
    const ControlCondition cond{bit_of(control), control_value};
    kernels_->apply_matrix(amps_.data(), num_qubits_, bit_of(target),
                           rotation_matrix(axis, theta), &cond);
}

void StateVector::apply(const GateSpec &gate) {
    const bool two_qubit =
        gate.kind == GateKind::CNOT || gate.kind == GateKind::ControlledRot;
    if (two_qubit != gate.qubit1.has_value()) {
        throw SizeError("GateSpec: wrong number of qubits for gate kind");
    }
    switch (gate.kind) {
    case GateKind::RX:
        apply_rx(gate.qubit0, gate.angle);
        break;
    case GateKind::RY:
        apply_ry(gate.qubit0, gate.angle);
        break;
    case GateKind::RZ:
        apply_rz(gate.qubit0, gate.angle);
        break;
    case GateKind::CNOT:
        apply_cnot(gate.qubit0, *gate.qubit1);
        break;
    case GateKind::ControlledRot:
        apply_controlled_rot(gate.qubit0, *gate.qubit1, gate.axis, gate.angle,
                             gate.control_value);
        break;
    }
}

double StateVector::expectation_z(std::size_t qubit) const {
    check_qubit(qubit);
    return kernels_->expectation_z(amps_.data(), num_qubits_, bit_of(qubit));
}

double StateVector::norm_squared() const {
    return kernels_->norm_squared(amps_.data(), amps_.size());
}

} // namespace qcnn::sim
