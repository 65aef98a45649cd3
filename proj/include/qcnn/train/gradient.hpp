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
 * Gradient estimators over a black-box loss.
 */
#pragma once

#include "qcnn/core/rng.hpp"

#include <functional>
#include <span>
#include <vector>

namespace qcnn::train {

using LossFn = std::function<double(std::span<const double>)>;

/**
 * Simultaneous-perturbation estimate from exactly two loss evaluations.
 *
 * Draws delta in {-1, +1}^d (d Rademacher draws from @p rng, in coordinate
 * order) and returns [L(theta + eps delta) - L(theta - eps delta)] / (2 eps)
 * times delta. Unbiased up to O(eps^2) for smooth L; each coordinate carries
 * variance sum_{j != i} g_j^2 from the other directions.
 */
std::vector<double> spsb_gradient(const LossFn &loss, std::span<const double> params,
                                  double epsilon, Rng &rng);

/// Central differences, one coordinate at a time (2d evaluations).
std::vector<double> finite_diff_gradient(const LossFn &loss,
                                         std::span<const double> params, double h);

/// ||a - b|| / ||b||.
double relative_l2_error(std::span<const double> a, std::span<const double> b);

} // namespace qcnn::train
