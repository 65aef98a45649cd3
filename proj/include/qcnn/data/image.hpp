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
 * Grayscale images from raw bytes and bilinear resampling.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace qcnn::data {

struct GrayImage {
    std::size_t width = 0;
    std::size_t height = 0;
    std::vector<std::uint8_t> pixels; ///< row-major, width * height

    GrayImage() = default;
    GrayImage(std::size_t w, std::size_t h, std::vector<std::uint8_t> px);

    [[nodiscard]] std::uint8_t at(std::size_t x, std::size_t y) const {
        return pixels[y * width + x];
    }
};

/// Image width for a file of @p num_bytes bytes:
/// <10 KB: 32, <30 KB: 64, <60 KB: 128, <100 KB: 256, <200 KB: 384,
/// <500 KB: 512, <1000 KB: 768, otherwise 1024 (1 KB = 1024 bytes).
std::size_t grayscale_width(std::size_t num_bytes);

/// One byte per pixel, row-major, last row zero-padded. Throws DataError on
/// empty input.
GrayImage bytes_to_grayscale(std::span<const std::uint8_t> bytes);

/// Bilinear resampling with corner-aligned pixel centres
/// (src = dst * (in - 1) / (out - 1)), rounded half-up and clamped to [0, 255].
GrayImage resize_bilinear(const GrayImage &img, std::size_t out_width,
                          std::size_t out_height);

} // namespace qcnn::data
