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
 * Binary cross-entropy, prediction rule and classification metrics.
 */
#pragma once

#include "qcnn/core/dataset.hpp"

#include <span>

namespace qcnn::train {

inline constexpr double kDefaultProbClamp = 1e-10;

/// -sum_i [y_i ln p1_i + (1 - y_i) ln(1 - p1_i)] with p1 clipped to
/// [clamp, 1 - clamp]. Natural log; summed, not averaged.
double cross_entropy(std::span<const double> p1, std::span<const Label> labels,
                     double clamp = kDefaultProbClamp);

/// 1 if p1 >= 0.5, else 0.
inline Label predict(double p1) { return p1 >= 0.5 ? 1 : 0; }

/// Fraction of matching entries. Throws SizeError on empty or mismatched input.
double accuracy(std::span<const Label> preds, std::span<const Label> labels);

/// F1 of @p positive_class. Zero when precision + recall is zero.
double f1_score(std::span<const Label> preds, std::span<const Label> labels,
                Label positive_class = 1);

} // namespace qcnn::train
