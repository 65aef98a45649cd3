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

#include "qcnn/train/gradient.hpp"

#include "qcnn/core/error.hpp"

#include <cmath>

namespace qcnn::train {

std::vector<double> spsb_gradient(const LossFn &loss, std::span<const double> params,
                                  double epsilon, Rng &rng) {
    if (!(epsilon > 0.0)) {
        throw ConfigError("spsb_gradient: epsilon must be positive");
    }
    const std::size_t d = params.size();
    std::vector<double> delta(d);
    for (double &v : delta) {
        v = rng.rademacher();
    }
    std::vector<double> plus(params.begin(), params.end());
    std::vector<double> minus(params.begin(), params.end());
    for (std::size_t i = 0; i < d; ++i) {
        plus[i] += epsilon * delta[i];
        minus[i] -= epsilon * delta[i];
    }
    const double scale = (loss(plus) - loss(minus)) / (2.0 * epsilon);
    for (double &v : delta) {
        v *= scale;
    }
    return delta;
}

std::vector<double> finite_diff_gradient(const LossFn &loss,
                                         std::span<const double> params, double h) {
    if (!(h > 0.0)) {
        throw ConfigError("finite_diff_gradient: step must be positive");
    }
    std::vector<double> point(params.begin(), params.end());
    std::vector<double> grad(params.size());
    for (std::size_t i = 0; i < params.size(); ++i) {
        point[i] = params[i] + h;
        const double up = loss(point);
        point[i] = params[i] - h;
        const double down = loss(point);
        point[i] = params[i];
        grad[i] = (up - down) / (2.0 * h);
    }
    return grad;
}

double relative_l2_error(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) {
        throw SizeError("relative_l2_error: length mismatch");
    }
    double diff = 0.0;
    double ref = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        diff += (a[i] - b[i]) * (a[i] - b[i]);
        ref += b[i] * b[i];
    }
    return std::sqrt(diff) / std::sqrt(ref);
}

} // namespace qcnn::train
