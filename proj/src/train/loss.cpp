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

#include "qcnn/train/loss.hpp"

#include "qcnn/core/error.hpp"

#include <algorithm>
#include <cmath>

namespace qcnn::train {

double cross_entropy(std::span<const double> p1, std::span<const Label> labels,
                     double clamp) {
    if (p1.size() != labels.size()) {
        throw SizeError("cross_entropy: probability/label length mismatch");
    }
    double total = 0.0;
    for (std::size_t i = 0; i < p1.size(); ++i) {
        const double p = std::clamp(p1[i], clamp, 1.0 - clamp);
        total -= labels[i] != 0 ? std::log(p) : std::log(1.0 - p);
    }
    return total;
}

double accuracy(std::span<const Label> preds, std::span<const Label> labels) {
    if (preds.size() != labels.size() || preds.empty()) {
        throw SizeError("accuracy: inputs must be non-empty and equal length");
    }
    std::size_t hits = 0;
    for (std::size_t i = 0; i < preds.size(); ++i) {
        hits += preds[i] == labels[i] ? 1U : 0U;
    }
    return static_cast<double>(hits) / static_cast<double>(preds.size());
}

double f1_score(std::span<const Label> preds, std::span<const Label> labels,
                Label positive_class) {
    if (preds.size() != labels.size() || preds.empty()) {
        throw SizeError("f1_score: inputs must be non-empty and equal length");
    }
    double tp = 0.0;
    double fp = 0.0;
    double fn = 0.0;
    for (std::size_t i = 0; i < preds.size(); ++i) {
        const bool pred_pos = preds[i] == positive_class;
        const bool true_pos = labels[i] == positive_class;
        tp += (pred_pos && true_pos) ? 1.0 : 0.0;
        fp += (pred_pos && !true_pos) ? 1.0 : 0.0;
        fn += (!pred_pos && true_pos) ? 1.0 : 0.0;
    }
    // 2PR/(P+R) == 2tp/(2tp+fp+fn); zero precision and recall both give tp == 0.
    const double denom = 2.0 * tp + fp + fn;
    return tp == 0.0 || denom == 0.0 ? 0.0 : 2.0 * tp / denom;
}

} // namespace qcnn::train
