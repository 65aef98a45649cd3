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
 * Raw samples to scaled PCA features: select, resize, split, fit on the
 * training rows only, transform both splits, scale into [0, pi/2].
 */
#pragma once

#include "qcnn/core/dataset.hpp"
#include "qcnn/data/corpus.hpp"
#include "qcnn/data/image.hpp"
#include "qcnn/data/pca.hpp"

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

namespace qcnn::data {

inline constexpr std::size_t kImageSide = 64;

/// Fixed-size 8-bit samples, one flattened image per row.
struct RawSamples {
    std::size_t dim = 0;
    std::vector<std::uint8_t> pixels; ///< size() * dim
    std::vector<Label> labels;

    [[nodiscard]] std::size_t size() const { return labels.size(); }
    [[nodiscard]] std::span<const std::uint8_t> row(std::size_t i) const {
        return {pixels.data() + i * dim, dim};
    }
};

/**
 * Loads the MNIST IDX files under @p dir, keeps digits @p class_a (label 0)
 * and @p class_b (label 1) and resizes each image to side x side.
 *
 * train-images-idx3-ubyte / train-labels-idx1-ubyte are required; the t10k
 * pair is appended when present so the pooled set can be re-split.
 */
RawSamples load_mnist_binary(const std::filesystem::path &dir, std::uint8_t class_a,
                             std::uint8_t class_b, std::size_t side = kImageSide);

/// Grayscale-converts and resizes every corpus file.
RawSamples corpus_samples(const std::vector<CorpusFile> &files,
                          std::size_t side = kImageSide);

/// Copies the listed rows into a double matrix.
Matrix gather_rows(const RawSamples &samples, std::span<const std::size_t> rows);

struct PreparedData {
    Dataset train;
    Dataset test;
    PcaModel pca;
    MinMaxScaler scaler;
    std::vector<std::size_t> train_rows; ///< indices into the RawSamples
    std::vector<std::size_t> test_rows;
};

/// Stratified split, PCA with @p num_components fitted on the training rows,
/// min-max scaling fitted on the transformed training rows.
PreparedData prepare_features(const RawSamples &samples, std::size_t n_train,
                              std::size_t n_test, std::size_t num_components,
                              std::uint64_t split_seed);

} // namespace qcnn::data
