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

#include "qcnn/data/split.hpp"

#include "qcnn/core/error.hpp"
#include "qcnn/core/rng.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

namespace qcnn::data {

ClassSelection select_binary_classes(std::span<const std::uint8_t> labels,
                                     std::uint8_t class_a, std::uint8_t class_b) {
    if (class_a == class_b) {
        throw ConfigError("select_binary_classes: classes must differ");
    }
    ClassSelection out;
    std::array<std::size_t, 2> seen{0, 0};
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] == class_a || labels[i] == class_b) {
            const Label mapped = labels[i] == class_a ? 0 : 1;
            out.indices.push_back(i);
            out.labels.push_back(mapped);
            ++seen[mapped];
        }
    }
    if (seen[0] == 0 || seen[1] == 0) {
        throw DataError("select_binary_classes: class " +
                        std::to_string(seen[0] == 0 ? class_a : class_b) +
                        " absent from dataset");
    }
    return out;
}

namespace {

// Largest-remainder apportionment of `total` over classes with `counts`.
std::array<std::size_t, 2> apportion(std::size_t total,
                                     const std::array<std::size_t, 2> &counts,
                                     std::size_t population) {
    std::array<std::size_t, 2> quota{};
    std::array<double, 2> remainder{};
    std::size_t assigned = 0;
    for (std::size_t c = 0; c < 2; ++c) {
        const double exact = static_cast<double>(total) * static_cast<double>(counts[c]) /
                             static_cast<double>(population);
        quota[c] = static_cast<std::size_t>(std::floor(exact));
        remainder[c] = exact - static_cast<double>(quota[c]);
        assigned += quota[c];
    }
    while (assigned < total) {
        const std::size_t c = remainder[0] >= remainder[1] ? 0 : 1;
        ++quota[c];
        remainder[c] = -1.0;
        ++assigned;
    }
    return quota;
}

} // namespace

SplitIndices stratified_split(std::span<const Label> labels, std::size_t n_train,
                              std::size_t n_test, std::uint64_t seed) {
    if (n_train == 0 || n_test == 0) {
        throw SizeError("stratified_split: sizes must be positive");
    }
    if (n_train + n_test > labels.size()) {
        throw SizeError("stratified_split: requested " + std::to_string(n_train) + " + " +
                        std::to_string(n_test) + " samples but only " +
                        std::to_string(labels.size()) + " available");
    }
    std::array<std::vector<std::size_t>, 2> by_class;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] > 1) {
            throw DataError("stratified_split: labels must be 0 or 1");
        }
        by_class[labels[i]].push_back(i);
    }
    const std::array<std::size_t, 2> counts{by_class[0].size(), by_class[1].size()};
    const auto train_quota = apportion(n_train, counts, labels.size());
    auto test_quota = apportion(n_test, counts, labels.size());

    // Rounding can ask one class for a sample it no longer has; move the
    // shortfall to the other class.
    for (std::size_t c = 0; c < 2; ++c) {
        const std::size_t left = counts[c] - train_quota[c];
        if (test_quota[c] > left) {
            test_quota[1 - c] += test_quota[c] - left;
            test_quota[c] = left;
        }
    }

    Rng rng(seed);
    SplitIndices out;
    for (std::size_t c = 0; c < 2; ++c) {
        auto &pool = by_class[c];
        rng.shuffle(std::span<std::size_t>(pool));
        out.train.insert(out.train.end(), pool.begin(),
                         pool.begin() + static_cast<std::ptrdiff_t>(train_quota[c]));
        out.test.insert(out.test.end(),
                        pool.begin() + static_cast<std::ptrdiff_t>(train_quota[c]),
                        pool.begin() + static_cast<std::ptrdiff_t>(train_quota[c] + test_quota[c]));
    }
    rng.shuffle(std::span<std::size_t>(out.train));
    rng.shuffle(std::span<std::size_t>(out.test));
    return out;
}

} // namespace qcnn::data
