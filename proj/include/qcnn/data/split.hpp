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
 * Binary class extraction and seeded stratified splitting.
 */
#pragma once

#include "qcnn/core/dataset.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace qcnn::data {

struct ClassSelection {
    std::vector<std::size_t> indices; ///< positions in the source arrays
    std::vector<Label> labels;        ///< 0 for class_a, 1 for class_b
};

/// Keeps samples labelled @p class_a (-> 0) or @p class_b (-> 1) in source
/// order. Throws ConfigError when the classes coincide, DataError when either
/// class is absent.
ClassSelection select_binary_classes(std::span<const std::uint8_t> labels,
                                     std::uint8_t class_a, std::uint8_t class_b);

struct SplitIndices {
    std::vector<std::size_t> train;
    std::vector<std::size_t> test;
};

/**
 * Disjoint seeded train/test selection preserving class proportions.
 *
 * Per-class quotas are proportional to class frequency, rounded by largest
 * remainder, so each class count is within one sample of its exact share.
 * Both returned index lists are shuffled. Throws SizeError when
 * n_train + n_test exceeds the sample count or either size is zero.
 */
SplitIndices stratified_split(std::span<const Label> labels, std::size_t n_train,
                              std::size_t n_test, std::uint64_t seed);

} // namespace qcnn::data
