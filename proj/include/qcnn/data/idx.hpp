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
 * IDX container reader/writer (the MNIST distribution format).
 *
 * Layout: big-endian u32 magic (0x00000803 for u8 images, 0x00000801 for u8
 * labels), one big-endian u32 per dimension, then the raw payload.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

namespace qcnn::data {

inline constexpr std::uint32_t kIdxImageMagic = 0x00000803;
inline constexpr std::uint32_t kIdxLabelMagic = 0x00000801;

struct IdxImages {
    std::size_t count = 0;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::uint8_t> pixels; ///< count * rows * cols

    [[nodiscard]] std::span<const std::uint8_t> image(std::size_t i) const {
        return {pixels.data() + i * rows * cols, rows * cols};
    }
};

IdxImages parse_idx_images(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> parse_idx_labels(std::span<const std::uint8_t> bytes);

/// Throw DataError naming the file on I/O failure, bad magic or truncation.
IdxImages load_idx_images(const std::filesystem::path &path);
std::vector<std::uint8_t> load_idx_labels(const std::filesystem::path &path);

std::vector<std::uint8_t> encode_idx_images(const IdxImages &images);
std::vector<std::uint8_t> encode_idx_labels(std::span<const std::uint8_t> labels);

/// Whole-file read; DataError if missing or unreadable.
std::vector<std::uint8_t> read_file(const std::filesystem::path &path);

/// Writes via a sibling temporary file and rename.
void write_file_atomic(const std::filesystem::path &path,
                       std::span<const std::uint8_t> bytes);

} // namespace qcnn::data
