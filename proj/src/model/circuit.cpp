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

#include "qcnn/model/circuit.hpp"

#include "qcnn/core/error.hpp"

#include <string>

namespace qcnn::model {

namespace {

void require_length(std::span<const double> values, std::size_t expected,
                    const char *what) {
    if (values.size() != expected) {
        throw SizeError(std::string(what) + ": expected " +
                        std::to_string(expected) + " values, got " +
                        std::to_string(values.size()));
    }
}

void conv_gate(sim::StateVector &state, std::size_t first, std::size_t second,
               double theta1, double theta2) {
    state.apply_ry(first, theta1);
    state.apply_ry(second, theta2);
    state.apply_cnot(first, second);
}

} // namespace

void encode(sim::StateVector &state, std::span<const std::size_t> qubits,
            std::span<const double> features) {
    require_length(features, qubits.size(), "encode");
    for (std::size_t i = 0; i < qubits.size(); ++i) {
        const double x = features[i];
        if (!(x >= 0.0 && x <= kMaxFeature)) {
            throw SizeError("encode: feature " + std::to_string(i) +
                            " outside [0, pi/2]: " + std::to_string(x));
        }
        state.apply_ry(qubits[i], 2.0 * x);
    }
}

void conv_layer(sim::StateVector &state, std::span<const std::size_t> active,
                std::span<const double> params) {
    const std::size_t w = active.size();
    if (w < 2 || (w & (w - 1)) != 0) {
        throw SizeError("conv_layer: active width must be a power of two >= 2");
    }
    require_length(params, 2 * (w - 1), "conv_layer");
    std::size_t p = 0;
    for (std::size_t i = 0; i + 1 < w; i += 2) {
        conv_gate(state, active[i], active[i + 1], params[p], params[p + 1]);
        p += 2;
    }
    for (std::size_t i = 1; i + 1 < w; i += 2) {
        conv_gate(state, active[i], active[i + 1], params[p], params[p + 1]);
        p += 2;
    }
}

std::vector<std::size_t> pool_layer(sim::StateVector &state,
                                    std::span<const std::size_t> active,
                                    std::span<const double> params) {
    const std::size_t w = active.size();
    if (w == 0 || w % 2 != 0) {
        throw SizeError("pool_layer: active width must be even and non-zero");
    }
    require_length(params, w, "pool_layer");
    std::vector<std::size_t> survivors;
    survivors.reserve(w / 2);
    for (std::size_t i = 0; i < w / 2; ++i) {
        const std::size_t control = active[2 * i];
        const std::size_t target = active[2 * i + 1];
        state.apply_controlled_rot(control, target, sim::Axis::Z, params[2 * i], true);
        state.apply_controlled_rot(control, target, sim::Axis::X, params[2 * i + 1], false);
        survivors.push_back(target);
    }
    return survivors;
}

sim::StateVector run_circuit(const Architecture &arch,
                             std::span<const double> params,
                             std::span<const double> features) {
    require_length(params, arch.param_count, "forward(params)");
    require_length(features, arch.feature_count, "forward(features)");

    const auto slices = param_slices(arch);
    const auto blocks = feature_slices(arch);

    auto state = sim::StateVector::zero(arch.total_qubits);
    for (std::size_t l = 0; l < arch.active_qubits.size(); ++l) {
        const auto &active = arch.active_qubits[l];
        if (l < blocks.size()) {
            encode(state, active,
                   features.subspan(blocks[l].begin, blocks[l].size()));
        }
        conv_layer(state, active,
                   params.subspan(slices[l].conv.begin, slices[l].conv.size()));
        pool_layer(state, active,
                   params.subspan(slices[l].pool.begin, slices[l].pool.size()));
    }
    return state;
}

Prediction forward(const Architecture &arch, std::span<const double> params,
                   std::span<const double> features) {
    const auto state = run_circuit(arch, params, features);
    Prediction out;
    out.expectation = state.expectation_z(arch.survivor());
    out.p0 = (1.0 + out.expectation) / 2.0;
    out.p1 = (1.0 - out.expectation) / 2.0;
    return out;
}

std::vector<std::size_t> traced_qubits(const Architecture &arch) {
    std::vector<std::size_t> out;
    for (const auto &active : arch.active_qubits) {
        for (std::size_t i = 0; i < active.size(); i += 2) {
            out.push_back(active[i]);
        }
    }
    return out;
}

} // namespace qcnn::model
