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
 * QCNN layout: qubit bookkeeping plus parameter and feature index maps.
 *
 * An n-layer network runs on 2^n qubits. Layer l (1-based) acts on
 * 2^(n-l+1) active qubits; its convolution holds one two-qubit gate per
 * adjacent pair (w - 1 gates, 2 angles each) and its pooling one controlled
 * pair per qubit pair (w / 2 pairs, 2 angles each), for 3w - 2 angles. Summed
 * over widths 2^n .. 2 this is 6(2^n - 1) - 2n.
 *
 * Parameter layout is layer-major: conv angles (sublayer A gates, then
 * sublayer B gates, theta1 then theta2 per gate) followed by the pooling
 * angles (pair order, theta1 then theta2).
 */
#pragma once

#include <cstddef>
#include <vector>

namespace qcnn::model {

inline constexpr int kMaxLayers = 4;

/// Half-open index range [begin, end).
struct IndexRange {
    std::size_t begin = 0;
    std::size_t end = 0;
    [[nodiscard]] std::size_t size() const { return end - begin; }
    friend bool operator==(const IndexRange &, const IndexRange &) = default;
};

struct LayerSlices {
    IndexRange conv;
    IndexRange pool;
};

struct Architecture {
    int num_layers = 0;
    bool uploading = false;
    std::size_t total_qubits = 0;
    /// active_qubits[l] lists the qubits entering layer l (0-based).
    std::vector<std::vector<std::size_t>> active_qubits;
    std::size_t param_count = 0;
    std::size_t feature_count = 0;
    /// Feature counts consumed by each encoding layer, in circuit order.
    std::vector<std::size_t> feature_blocks;

    /// Qubit measured at the end of the circuit.
    [[nodiscard]] std::size_t survivor() const { return total_qubits - 1; }
};

/// Throws SizeError unless 1 <= num_layers <= 4.
Architecture build_architecture(int num_layers, bool uploading);

/// Closed form 6(2^n - 1) - 2n.
std::size_t closed_form_param_count(int num_layers);

/// Per-layer conv and pool ranges into the parameter vector.
std::vector<LayerSlices> param_slices(const Architecture &arch);

/// Per-encoding-layer ranges into the feature vector.
std::vector<IndexRange> feature_slices(const Architecture &arch);

} // namespace qcnn::model
