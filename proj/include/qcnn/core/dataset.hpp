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
 * Row-major labelled feature matrix exchanged between the data pipeline and
 * the trainer.
 */
#pragma once

#include "qcnn/core/error.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace qcnn {

/// Binary class label.
using Label = std::uint8_t;

struct Dataset {
    std::size_t num_features = 0;
    std::vector<double> values; ///< num_rows * num_features, row-major.
    std::vector<Label> labels;

    Dataset() = default;
    Dataset(std::size_t features, std::vector<double> vals,
            std::vector<Label> labs)
        : num_features(features), values(std::move(vals)),
          labels(std::move(labs)) {
        if (num_features == 0 || values.size() != labels.size() * num_features) {
            throw SizeError("Dataset: values/labels/num_features mismatch");
        }
    }

    [[nodiscard]] std::size_t size() const { return labels.size(); }
    [[nodiscard]] bool empty() const { return labels.empty(); }

    [[nodiscard]] std::span<const double> row(std::size_t i) const {
        return {values.data() + i * num_features, num_features};
    }

    void push_back(std::span<const double> features, Label label) {
        if (features.size() != num_features) {
            throw SizeError("Dataset::push_back: feature length mismatch");
        }
        values.insert(values.end(), features.begin(), features.end());
        labels.push_back(label);
    }

    /// Copy of the first @p count columns of every row.
    [[nodiscard]] Dataset leading_columns(std::size_t count) const {
        if (count == 0 || count > num_features) {
            throw SizeError("Dataset::leading_columns: column count out of range");
        }
        Dataset out;
        out.num_features = count;
        out.values.reserve(size() * count);
        for (std::size_t i = 0; i < size(); ++i) {
            const auto r = row(i);
            out.values.insert(out.values.end(), r.begin(), r.begin() + count);
        }
        out.labels = labels;
        return out;
    }
};

} // namespace qcnn
