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

#include "qcnn/data/pca.hpp"

#include "qcnn/core/error.hpp"
#include "qcnn/core/rng.hpp"

#include <algorithm>
#include <string>

namespace qcnn::data {

namespace {

struct EigenPairs {
    Eigen::VectorXd values; ///< descending
    Matrix vectors;         ///< one eigenvector per row
};

EigenPairs top_eigen_dense(const Eigen::MatrixXd &cov, std::size_t k) {
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(cov);
    if (solver.info() != Eigen::Success) {
        throw DataError("pca_fit: eigensolver did not converge");
    }
    const auto d = cov.rows();
    EigenPairs out;
    out.values.resize(static_cast<Eigen::Index>(k));
    out.vectors.resize(static_cast<Eigen::Index>(k), d);
    for (Eigen::Index i = 0; i < static_cast<Eigen::Index>(k); ++i) {
        // Eigen sorts ascending.
        out.values(i) = solver.eigenvalues()(d - 1 - i);
        out.vectors.row(i) = solver.eigenvectors().col(d - 1 - i).transpose();
    }
    return out;
}

// Block power iteration on the covariance with a Rayleigh-Ritz projection each
// sweep. The block is oversampled so the convergence ratio is
// lambda_{block+1} / lambda_k rather than lambda_{k+1} / lambda_k.
EigenPairs top_eigen_subspace(const Eigen::MatrixXd &cov, std::size_t k) {
    constexpr int kMaxSweeps = 500;
    constexpr double kResidualTol = 1e-9;
    const Eigen::Index d = cov.rows();
    const auto kk = static_cast<Eigen::Index>(k);
    const Eigen::Index block = std::min<Eigen::Index>(d, std::max<Eigen::Index>(2 * kk, kk + 16));

    Rng rng(0x9E3779B97F4A7C15ULL);
    Eigen::MatrixXd q(d, block);
    for (Eigen::Index j = 0; j < block; ++j) {
        for (Eigen::Index i = 0; i < d; ++i) {
            q(i, j) = rng.normal();
        }
    }
    q = Eigen::HouseholderQR<Eigen::MatrixXd>(q).householderQ() *
        Eigen::MatrixXd::Identity(d, block);

    const double scale = std::max(cov.diagonal().maxCoeff(), 1e-300);
    EigenPairs out;
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        const Eigen::MatrixXd z = cov * q;
        const Eigen::MatrixXd t = q.transpose() * z;
        const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> small(
            0.5 * (t + t.transpose()));
        // Largest Ritz pairs sit at the end of Eigen's ascending order.
        const Eigen::MatrixXd w = small.eigenvectors().rightCols(kk).rowwise().reverse();
        const Eigen::VectorXd lam = small.eigenvalues().tail(kk).reverse();
        const Eigen::MatrixXd ritz = q * w;
        const Eigen::MatrixXd residual = z * w - ritz * lam.asDiagonal();

        double worst = 0.0;
        for (Eigen::Index i = 0; i < kk; ++i) {
            worst = std::max(worst, residual.col(i).norm());
        }
        out.values = lam;
        out.vectors = ritz.transpose();
        if (worst <= kResidualTol * scale) {
            return out;
        }
        q = Eigen::HouseholderQR<Eigen::MatrixXd>(z).householderQ() *
            Eigen::MatrixXd::Identity(d, block);
    }
    // Slow spectra still give a usable basis; the residual bound just was not met.
    return out;
}

void canonical_signs(Matrix &rows) {
    for (Eigen::Index i = 0; i < rows.rows(); ++i) {
        Eigen::Index arg = 0;
        rows.row(i).cwiseAbs().maxCoeff(&arg);
        if (rows(i, arg) < 0.0) {
            rows.row(i) *= -1.0;
        }
    }
}

} // namespace

PcaModel pca_fit(const Matrix &data, std::size_t k, EigenRoute route) {
    const auto n = static_cast<std::size_t>(data.rows());
    const auto d = static_cast<std::size_t>(data.cols());
    if (k < 1 || k > d || k >= n) {
        throw SizeError("pca_fit: need 1 <= k <= d and k < N (k=" + std::to_string(k) +
                        ", N=" + std::to_string(n) + ", d=" + std::to_string(d) + ")");
    }

    PcaModel model;
    model.mean = data.colwise().mean().transpose();

    Eigen::MatrixXd cov = Eigen::MatrixXd::Zero(data.cols(), data.cols());
    constexpr Eigen::Index kChunk = 1024;
    for (Eigen::Index start = 0; start < data.rows(); start += kChunk) {
        const Eigen::Index len = std::min(kChunk, data.rows() - start);
        const Eigen::MatrixXd centred =
            data.middleRows(start, len).rowwise() - model.mean.transpose();
        cov.selfadjointView<Eigen::Lower>().rankUpdate(centred.transpose());
    }
    cov.triangularView<Eigen::StrictlyUpper>() = cov.transpose();
    cov /= static_cast<double>(n - 1);

    if (cov.trace() <= 0.0) {
        throw DataError("pca_fit: data matrix is constant");
    }

    const bool dense = route == EigenRoute::Dense ||
                       (route == EigenRoute::Auto && d <= kDenseEigenLimit);
    EigenPairs pairs = dense ? top_eigen_dense(cov, k) : top_eigen_subspace(cov, k);

    model.components = std::move(pairs.vectors);
    model.explained_variance = pairs.values.cwiseMax(0.0);
    canonical_signs(model.components);
    return model;
}

Matrix pca_transform(const PcaModel &model, const Matrix &data) {
    if (static_cast<std::size_t>(data.cols()) != model.input_dim()) {
        throw SizeError("pca_transform: input has " + std::to_string(data.cols()) +
                        " columns, model expects " + std::to_string(model.input_dim()));
    }
    return (data.rowwise() - model.mean.transpose()) * model.components.transpose();
}

MinMaxScaler scale_fit(const Matrix &data, double upper) {
    if (data.rows() == 0) {
        throw SizeError("scale_fit: empty matrix");
    }
    MinMaxScaler s;
    s.min = data.colwise().minCoeff().transpose();
    s.max = data.colwise().maxCoeff().transpose();
    s.upper = upper;
    return s;
}

Matrix scale_transform(const MinMaxScaler &scaler, const Matrix &data) {
    if (data.cols() != scaler.min.size()) {
        throw SizeError("scale_transform: column count mismatch");
    }
    Matrix out(data.rows(), data.cols());
    for (Eigen::Index j = 0; j < data.cols(); ++j) {
        const double lo = scaler.min(j);
        const double span = scaler.max(j) - lo;
        for (Eigen::Index i = 0; i < data.rows(); ++i) {
            const double v = span > 0.0 ? (data(i, j) - lo) / span * scaler.upper : 0.0;
            out(i, j) = std::clamp(v, 0.0, scaler.upper);
        }
    }
    return out;
}

} // namespace qcnn::data
