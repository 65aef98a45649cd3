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

#include "qcnn/model/architecture.hpp"

#include "qcnn/core/error.hpp"

#include <string>
#include <utility>

namespace qcnn::model {

std::size_t closed_form_param_count(int num_layers) {
    const std::size_t width = std::size_t{1} << num_layers;
    return 6 * (width - 1) - 2 * static_cast<std::size_t>(num_layers);
}

Architecture build_architecture(int num_layers, bool uploading) {
    if (num_layers < 1 || num_layers > kMaxLayers) {
        throw SizeError("num_layers must be in [1, 4], got " +
                        std::to_string(num_layers));
    }
    Architecture arch;
    arch.num_layers = num_layers;
    arch.uploading = uploading;
    arch.total_qubits = std::size_t{1} << num_layers;

    std::vector<std::size_t> active(arch.total_qubits);
    for (std::size_t q = 0; q < active.size(); ++q) {
        active[q] = q;
    }
    for (int l = 0; l < num_layers; ++l) {
        arch.active_qubits.push_back(active);
        const std::size_t w = active.size();
        arch.param_count += 3 * w - 2;
        std::vector<std::size_t> survivors;
        for (std::size_t i = 1; i < w; i += 2) {
            survivors.push_back(active[i]);
        }
        active = std::move(survivors);
    }

    if (uploading) {
        for (const auto &layer : arch.active_qubits) {
            arch.feature_blocks.push_back(layer.size());
        }
    } else {
        arch.feature_blocks.push_back(arch.total_qubits);
    }
    for (const std::size_t b : arch.feature_blocks) {
        arch.feature_count += b;
    }
    return arch;
}

std::vector<LayerSlices> param_slices(const Architecture &arch) {
    std::vector<LayerSlices> out;
    std::size_t offset = 0;
    for (const auto &layer : arch.active_qubits) {
        const std::size_t w = layer.size();
        LayerSlices s;
        s.conv = {offset, offset + 2 * (w - 1)};
        s.pool = {s.conv.end, s.conv.end + w};
        offset = s.pool.end;
        out.push_back(s);
    }
    return out;
}

std::vector<IndexRange> feature_slices(const Architecture &arch) {
    std::vector<IndexRange> out;
    std::size_t offset = 0;
    for (const std::size_t b : arch.feature_blocks) {
        out.push_back({offset, offset + b});
        offset += b;
    }
    return out;
}

} // namespace qcnn::model
