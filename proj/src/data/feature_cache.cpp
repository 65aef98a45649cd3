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

#include "qcnn/data/feature_cache.hpp"

#include "qcnn/core/error.hpp"
#include "qcnn/data/idx.hpp"

#include <bit>
#include <cstring>
#include <limits>

namespace qcnn::data {

namespace {

void put_u32(std::vector<std::uint8_t> &out, std::size_t value) {
    if (value > std::numeric_limits<std::uint32_t>::max()) {
        throw SizeError("feature cache: dimension does not fit in 32 bits");
    }
    for (int i = 0; i < 4; ++i) {
        out.push_back(static_cast<std::uint8_t>((value >> (8 * i)) & 0xFFU));
    }
}

std::uint32_t get_u32(std::span<const std::uint8_t> in, std::size_t offset) {
    std::uint32_t v = 0;
    for (std::size_t i = 0; i < 4; ++i) {
        v |= std::uint32_t{in[offset + i]} << (8 * i);
    }
    return v;
}

} // namespace

std::vector<std::uint8_t> encode_feature_cache(const Dataset &data) {
    std::vector<std::uint8_t> out;
    out.reserve(16 + data.values.size() * 8 + data.size());
    put_u32(out, kFeatureCacheMagic);
    put_u32(out, data.size());
    put_u32(out, data.num_features);
    put_u32(out, 0);
    for (const double v : data.values) {
        const auto bits = std::bit_cast<std::uint64_t>(v);
        for (int i = 0; i < 8; ++i) {
            out.push_back(static_cast<std::uint8_t>((bits >> (8 * i)) & 0xFFU));
        }
    }
    out.insert(out.end(), data.labels.begin(), data.labels.end());
    return out;
}

Dataset decode_feature_cache(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < 16) {
        throw DataError("feature cache: truncated header");
    }
    if (get_u32(bytes, 0) != kFeatureCacheMagic) {
        throw DataError("feature cache: bad magic");
    }
    const std::size_t rows = get_u32(bytes, 4);
    const std::size_t cols = get_u32(bytes, 8);
    if (cols == 0) {
        throw DataError("feature cache: zero columns");
    }
    const std::size_t expected = 16 + rows * cols * 8 + rows;
    if (bytes.size() != expected) {
        throw DataError("feature cache: expected " + std::to_string(expected) +
                        " bytes, got " + std::to_string(bytes.size()));
    }
    std::vector<double> values(rows * cols);
    std::size_t offset = 16;
    for (double &v : values) {
        std::uint64_t bits = 0;
        for (std::size_t i = 0; i < 8; ++i) {
            bits |= std::uint64_t{bytes[offset + i]} << (8 * i);
        }
        v = std::bit_cast<double>(bits);
        offset += 8;
    }
    std::vector<Label> labels(bytes.begin() + static_cast<std::ptrdiff_t>(offset), bytes.end());
    return {cols, std::move(values), std::move(labels)};
}

void write_feature_cache(const std::filesystem::path &path, const Dataset &data) {
    write_file_atomic(path, encode_feature_cache(data));
}

Dataset read_feature_cache(const std::filesystem::path &path) {
    try {
        return decode_feature_cache(read_file(path));
    } catch (const DataError &e) {
        throw DataError(path.string() + ": " + e.what());
    }
}

} // namespace qcnn::data
