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

#include "qcnn/data/idx.hpp"

#include "qcnn/core/error.hpp"

#include <fstream>
#include <iterator>
#include <limits>
#include <string>

namespace qcnn::data {

namespace {

std::uint32_t read_be32(std::span<const std::uint8_t> bytes, std::size_t offset) {
    if (offset + 4 > bytes.size()) {
        throw DataError("IDX: truncated header");
    }
    return (std::uint32_t{bytes[offset]} << 24) | (std::uint32_t{bytes[offset + 1]} << 16) |
           (std::uint32_t{bytes[offset + 2]} << 8) | std::uint32_t{bytes[offset + 3]};
}

void append_be32(std::vector<std::uint8_t> &out, std::size_t value) {
    if (value > std::numeric_limits<std::uint32_t>::max()) {
        throw SizeError("IDX: dimension does not fit in 32 bits");
    }
    for (int shift = 24; shift >= 0; shift -= 8) {
        out.push_back(static_cast<std::uint8_t>((value >> shift) & 0xFFU));
    }
}

void check_magic(std::uint32_t got, std::uint32_t want) {
    if (got != want) {
        throw DataError("IDX: bad magic 0x" + [](std::uint32_t v) {
            static const char *digits = "0123456789abcdef";
            std::string s(8, '0');
            for (int i = 7; i >= 0; --i, v >>= 4) {
                s[static_cast<std::size_t>(i)] = digits[v & 0xFU];
            }
            return s;
        }(got));
    }
}

} // namespace

IdxImages parse_idx_images(std::span<const std::uint8_t> bytes) {
    check_magic(read_be32(bytes, 0), kIdxImageMagic);
    IdxImages out;
    out.count = read_be32(bytes, 4);
    out.rows = read_be32(bytes, 8);
    out.cols = read_be32(bytes, 12);
    // Guard the product against overflow before trusting it as a length.
    const std::size_t per_image = out.rows * out.cols;
    if (out.rows != 0 && per_image / out.rows != out.cols) {
        throw DataError("IDX: dimension overflow");
    }
    if (per_image != 0 && out.count > (std::numeric_limits<std::size_t>::max() - 16) / per_image) {
        throw DataError("IDX: dimension overflow");
    }
    const std::size_t payload = out.count * per_image;
    if (bytes.size() - 16 < payload) {
        throw DataError("IDX: truncated payload (declared " + std::to_string(out.count) +
                        " images of " + std::to_string(per_image) + " bytes, have " +
                        std::to_string(bytes.size() - 16) + " bytes)");
    }
    out.pixels.assign(bytes.begin() + 16, bytes.begin() + 16 + static_cast<std::ptrdiff_t>(payload));
    return out;
}

std::vector<std::uint8_t> parse_idx_labels(std::span<const std::uint8_t> bytes) {
    check_magic(read_be32(bytes, 0), kIdxLabelMagic);
    const std::size_t count = read_be32(bytes, 4);
    if (bytes.size() - 8 < count) {
        throw DataError("IDX: truncated payload (declared " + std::to_string(count) +
                        " labels, have " + std::to_string(bytes.size() - 8) + ")");
    }
    return {bytes.begin() + 8, bytes.begin() + 8 + static_cast<std::ptrdiff_t>(count)};
}

std::vector<std::uint8_t> read_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw DataError("cannot open file: " + path.string());
    }
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    if (in.bad()) {
        throw DataError("read failed: " + path.string());
    }
    return bytes;
}

void write_file_atomic(const std::filesystem::path &path,
                       std::span<const std::uint8_t> bytes) {
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw DataError("cannot write file: " + tmp.string());
        }
        out.write(reinterpret_cast<const char *>(bytes.data()),
                  static_cast<std::streamsize>(bytes.size()));
        if (!out) {
            throw DataError("write failed: " + tmp.string());
        }
    }
    std::filesystem::rename(tmp, path);
}

IdxImages load_idx_images(const std::filesystem::path &path) {
    try {
        return parse_idx_images(read_file(path));
    } catch (const DataError &e) {
        throw DataError(path.string() + ": " + e.what());
    }
}

std::vector<std::uint8_t> load_idx_labels(const std::filesystem::path &path) {
    try {
        return parse_idx_labels(read_file(path));
    } catch (const DataError &e) {
        throw DataError(path.string() + ": " + e.what());
    }
}

std::vector<std::uint8_t> encode_idx_images(const IdxImages &images) {
    if (images.pixels.size() != images.count * images.rows * images.cols) {
        throw SizeError("encode_idx_images: pixel count mismatch");
    }
    std::vector<std::uint8_t> out;
    out.reserve(16 + images.pixels.size());
    append_be32(out, kIdxImageMagic);
    append_be32(out, images.count);
    append_be32(out, images.rows);
    append_be32(out, images.cols);
    out.insert(out.end(), images.pixels.begin(), images.pixels.end());
    return out;
}

std::vector<std::uint8_t> encode_idx_labels(std::span<const std::uint8_t> labels) {
    std::vector<std::uint8_t> out;
    out.reserve(8 + labels.size());
    append_be32(out, kIdxLabelMagic);
    append_be32(out, labels.size());
    out.insert(out.end(), labels.begin(), labels.end());
    return out;
}

} // namespace qcnn::data
