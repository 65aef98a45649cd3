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

#include "qcnn/data/pipeline.hpp"

#include "qcnn/core/error.hpp"
#include "qcnn/data/idx.hpp"
#include "qcnn/data/split.hpp"

#include <numbers>

namespace qcnn::data {

namespace {

void append_resized(RawSamples &out, const GrayImage &img, std::size_t side) {
    const GrayImage resized = resize_bilinear(img, side, side);
    out.pixels.insert(out.pixels.end(), resized.pixels.begin(), resized.pixels.end());
}

void append_mnist(RawSamples &out, const IdxImages &images,
                  std::span<const std::uint8_t> labels, std::uint8_t class_a,
                  std::uint8_t class_b, std::size_t side) {
    if (images.count != labels.size()) {
        throw DataError("MNIST: image and label counts differ");
    }
    const ClassSelection sel = select_binary_classes(labels, class_a, class_b);
    for (std::size_t i = 0; i < sel.indices.size(); ++i) {
        const auto px = images.image(sel.indices[i]);
        append_resized(out, GrayImage(images.cols, images.rows, {px.begin(), px.end()}), side);
        out.labels.push_back(sel.labels[i]);
    }
}

} // namespace

RawSamples load_mnist_binary(const std::filesystem::path &dir, std::uint8_t class_a,
                             std::uint8_t class_b, std::size_t side) {
    RawSamples out;
    out.dim = side * side;
    append_mnist(out, load_idx_images(dir / "train-images-idx3-ubyte"),
                 load_idx_labels(dir / "train-labels-idx1-ubyte"), class_a, class_b, side);
    const auto test_images = dir / "t10k-images-idx3-ubyte";
    const auto test_labels = dir / "t10k-labels-idx1-ubyte";
    if (std::filesystem::exists(test_images) && std::filesystem::exists(test_labels)) {
        append_mnist(out, load_idx_images(test_images), load_idx_labels(test_labels),
                     class_a, class_b, side);
    }
    return out;
}

RawSamples corpus_samples(const std::vector<CorpusFile> &files, std::size_t side) {
    RawSamples out;
    out.dim = side * side;
    for (const auto &f : files) {
        append_resized(out, bytes_to_grayscale(f.bytes), side);
        out.labels.push_back(f.label);
    }
    return out;
}

Matrix gather_rows(const RawSamples &samples, std::span<const std::size_t> rows) {
    Matrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(samples.dim));
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const auto px = samples.row(rows[r]);
        for (std::size_t c = 0; c < samples.dim; ++c) {
            m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = px[c];
        }
    }
    return m;
}

namespace {
Dataset to_dataset(const Matrix &features, const RawSamples &samples,
                   std::span<const std::size_t> rows) {
    Dataset out;
    out.num_features = static_cast<std::size_t>(features.cols());
    out.values.assign(features.data(), features.data() + features.size());
    for (const std::size_t r : rows) {
        out.labels.push_back(samples.labels[r]);
    }
    return out;
}
} // namespace

PreparedData prepare_features(const RawSamples &samples, std::size_t n_train,
                              std::size_t n_test, std::size_t num_components,
                              std::uint64_t split_seed) {
    PreparedData out;
    SplitIndices split = stratified_split(samples.labels, n_train, n_test, split_seed);
    out.train_rows = std::move(split.train);
    out.test_rows = std::move(split.test);

    Matrix train_features;
    {
        const Matrix train_raw = gather_rows(samples, out.train_rows);
        out.pca = pca_fit(train_raw, num_components);
        train_features = pca_transform(out.pca, train_raw);
    }
    const Matrix test_features = pca_transform(out.pca, gather_rows(samples, out.test_rows));

    out.scaler = scale_fit(train_features, std::numbers::pi / 2.0);
    out.train = to_dataset(scale_transform(out.scaler, train_features), samples, out.train_rows);
    out.test = to_dataset(scale_transform(out.scaler, test_features), samples, out.test_rows);
    return out;
}

} // namespace qcnn::data
