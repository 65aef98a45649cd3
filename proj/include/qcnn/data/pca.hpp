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
 * Principal component analysis and min-max feature scaling.
 */
#pragma once

#include <Eigen/Dense>

#include <cstddef>

namespace qcnn::data {

using Matrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

enum class EigenRoute {
    Auto,     ///< dense below kDenseEigenLimit, subspace iteration above
    Dense,    ///< full symmetric eigendecomposition
    Subspace, ///< block power iteration with Rayleigh-Ritz
};

inline constexpr std::size_t kDenseEigenLimit = 1024;

struct PcaModel {
    Eigen::VectorXd mean;               ///< d
    Matrix components;                  ///< k x d, orthonormal rows
    Eigen::VectorXd explained_variance; ///< k, non-increasing

    [[nodiscard]] std::size_t input_dim() const {
        return static_cast<std::size_t>(mean.size());
    }
    [[nodiscard]] std::size_t num_components() const {
        return static_cast<std::size_t>(components.rows());
    }
};

/**
 * Fits the top-@p k principal axes of @p data (rows are samples).
 *
 * Components are unit eigenvectors of the sample covariance (N - 1
 * normalisation), sorted by decreasing eigenvalue, each signed so that its
 * largest-magnitude entry is positive. Requires 1 <= k <= d and k < N
 * (SizeError otherwise); all-constant data raises DataError.
 */
PcaModel pca_fit(const Matrix &data, std::size_t k, EigenRoute route = EigenRoute::Auto);

/// (row - mean) * components^T.
Matrix pca_transform(const PcaModel &model, const Matrix &data);

struct MinMaxScaler {
    Eigen::VectorXd min;
    Eigen::VectorXd max;
    double upper = 0.0; ///< target interval is [0, upper]
};

/// Per-column min/max of @p data, mapping onto [0, upper].
MinMaxScaler scale_fit(const Matrix &data, double upper);

/// (x - min) / (max - min) * upper, clamped to [0, upper]; constant columns
/// map to 0.
Matrix scale_transform(const MinMaxScaler &scaler, const Matrix &data);

} // namespace qcnn::data
