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

#include "qcnn/data/image.hpp"

#include "qcnn/core/error.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <utility>

namespace qcnn::data {

GrayImage::GrayImage(std::size_t w, std::size_t h, std::vector<std::uint8_t> px)
    : width(w), height(h), pixels(std::move(px)) {
    if (w == 0 || h == 0 || pixels.size() != w * h) {
        throw SizeError("GrayImage: pixel count does not match width * height");
    }
}

std::size_t grayscale_width(std::size_t num_bytes) {
    constexpr std::size_t kb = 1024;
    constexpr std::array<std::pair<std::size_t, std::size_t>, 7> brackets{{
        {10 * kb, 32},
        {30 * kb, 64},
        {60 * kb, 128},
        {100 * kb, 256},
        {200 * kb, 384},
        {500 * kb, 512},
        {1000 * kb, 768},
    }};
    for (const auto &[limit, width] : brackets) {
        if (num_bytes < limit) {
            return width;
        }
    }
    return 1024;
}

GrayImage bytes_to_grayscale(std::span<const std::uint8_t> bytes) {
    if (bytes.empty()) {
        throw DataError("bytes_to_grayscale: empty input");
    }
    const std::size_t width = grayscale_width(bytes.size());
    const std::size_t height = (bytes.size() + width - 1) / width;
    std::vector<std::uint8_t> pixels(width * height, 0);
    std::copy(bytes.begin(), bytes.end(), pixels.begin());
    return {width, height, std::move(pixels)};
}

GrayImage resize_bilinear(const GrayImage &img, std::size_t out_width,
                          std::size_t out_height) {
    if (out_width == 0 || out_height == 0) {
        throw SizeError("resize_bilinear: output size must be positive");
    }
    auto scale = [](std::size_t in, std::size_t out) {
        return out > 1 ? static_cast<double>(in - 1) / static_cast<double>(out - 1)
                       : 0.0;
    };
    const double sx = scale(img.width, out_width);
    const double sy = scale(img.height, out_height);

    std::vector<std::uint8_t> out(out_width * out_height);
    for (std::size_t y = 0; y < out_height; ++y) {
        const double fy = static_cast<double>(y) * sy;
        const auto y0 = std::min(static_cast<std::size_t>(fy), img.height - 1);
        const std::size_t y1 = std::min(y0 + 1, img.height - 1);
        const double wy = fy - static_cast<double>(y0);
        for (std::size_t x = 0; x < out_width; ++x) {
            const double fx = static_cast<double>(x) * sx;
            const auto x0 = std::min(static_cast<std::size_t>(fx), img.width - 1);
            const std::size_t x1 = std::min(x0 + 1, img.width - 1);
            const double wx = fx - static_cast<double>(x0);
            const double top = (1.0 - wx) * img.at(x0, y0) + wx * img.at(x1, y0);
            const double bottom = (1.0 - wx) * img.at(x0, y1) + wx * img.at(x1, y1);
            const double v = (1.0 - wy) * top + wy * bottom;
            out[y * out_width + x] =
                static_cast<std::uint8_t>(std::clamp(std::floor(v + 0.5), 0.0, 255.0));
        }
    }
    return {out_width, out_height, std::move(out)};
}

} // namespace qcnn::data
