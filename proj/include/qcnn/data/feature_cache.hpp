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
 * Flat binary feature cache.
 *
 * Little-endian header of four u32 (magic 0x51434E4E, n_rows, n_cols,
 * reserved = 0), then n_rows * n_cols IEEE-754 doubles row-major, then
 * n_rows label bytes.
 */
#pragma once

#include "qcnn/core/dataset.hpp"

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

namespace qcnn::data {

inline constexpr std::uint32_t kFeatureCacheMagic = 0x51434E4E;

std::vector<std::uint8_t> encode_feature_cache(const Dataset &data);
Dataset decode_feature_cache(std::span<const std::uint8_t> bytes);

void write_feature_cache(const std::filesystem::path &path, const Dataset &data);
Dataset read_feature_cache(const std::filesystem::path &path);

} // namespace qcnn::data
