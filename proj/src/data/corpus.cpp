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

#include "qcnn/data/corpus.hpp"

#include "qcnn/core/error.hpp"
#include "qcnn/core/rng.hpp"
#include "qcnn/data/idx.hpp"

#include <array>
#include <fstream>
#include <sstream>

namespace qcnn::data {

namespace {

constexpr std::size_t kMinSize = 4 * 1024;
constexpr std::size_t kMaxSize = 64 * 1024;

std::size_t draw_size(Rng &rng) {
    return kMinSize + static_cast<std::size_t>(rng.uniform_index(kMaxSize - kMinSize + 1));
}

// Repeating 16-byte motif over a small alphabet of low byte values, the way
// padding, tables and zero-filled sections look.
std::vector<std::uint8_t> low_entropy_file(Rng &rng) {
    const std::size_t size = draw_size(rng);
    const auto alphabet = 2 + rng.uniform_index(7);
    const auto ceiling = 16 + rng.uniform_index(64);
    std::array<std::uint8_t, 16> motif{};
    for (auto &b : motif) {
        const auto symbol = rng.uniform_index(alphabet);
        b = static_cast<std::uint8_t>(symbol * ceiling / alphabet);
    }
    std::vector<std::uint8_t> bytes(size);
    for (std::size_t i = 0; i < size; ++i) {
        bytes[i] = motif[i % motif.size()];
    }
    return bytes;
}

// Structured header (magic, size fields, zero padding) followed by uniform
// random bytes, the way packed or encrypted payloads look.
std::vector<std::uint8_t> high_entropy_file(Rng &rng) {
    const std::size_t size = draw_size(rng);
    std::vector<std::uint8_t> bytes(size);
    for (auto &b : bytes) {
        b = static_cast<std::uint8_t>(rng.next_u64() & 0xFFU);
    }
    constexpr std::size_t kHeader = 256;
    std::fill(bytes.begin(), bytes.begin() + kHeader, std::uint8_t{0});
    bytes[0] = 'M';
    bytes[1] = 'Z';
    for (std::size_t i = 0; i < 4; ++i) {
        bytes[4 + i] = static_cast<std::uint8_t>((size >> (8 * i)) & 0xFFU);
    }
    bytes[0x3C] = 0x80;
    bytes[0x80] = 'P';
    bytes[0x81] = 'E';
    return bytes;
}

} // namespace

std::vector<CorpusFile> synth_binary_corpus(std::size_t n_per_class,
                                            std::uint64_t seed) {
    Rng rng(seed);
    std::vector<CorpusFile> files;
    files.reserve(2 * n_per_class);
    for (std::size_t i = 0; i < n_per_class; ++i) {
        for (Label label : {Label{0}, Label{1}}) {
            CorpusFile f;
            f.label = label;
            f.path = (label == 0 ? "benign/" : "malicious/") + std::to_string(i) + ".bin";
            f.bytes = label == 0 ? low_entropy_file(rng) : high_entropy_file(rng);
            files.push_back(std::move(f));
        }
    }
    return files;
}

void write_corpus(const std::filesystem::path &root,
                  const std::vector<CorpusFile> &files) {
    std::filesystem::create_directories(root);
    std::ostringstream manifest;
    manifest << "path,label\n";
    for (const auto &f : files) {
        const auto target = root / f.path;
        std::filesystem::create_directories(target.parent_path());
        write_file_atomic(target, f.bytes);
        manifest << f.path << ',' << static_cast<int>(f.label) << '\n';
    }
    const std::string text = manifest.str();
    write_file_atomic(root / "labels.csv",
                      {reinterpret_cast<const std::uint8_t *>(text.data()), text.size()});
}

std::vector<CorpusFile> load_corpus(const std::filesystem::path &root) {
    const auto manifest_path = root / "labels.csv";
    std::ifstream in(manifest_path);
    if (!in) {
        throw DataError("missing corpus manifest: " + manifest_path.string());
    }
    std::string line;
    if (!std::getline(in, line) || (line != "path,label" && line != "path,label\r")) {
        throw DataError(manifest_path.string() + ": expected header 'path,label'");
    }
    std::vector<CorpusFile> files;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        const auto comma = line.rfind(',');
        const std::string label_text = comma == std::string::npos ? "" : line.substr(comma + 1);
        if (comma == std::string::npos || comma == 0 || (label_text != "0" && label_text != "1")) {
            throw DataError(manifest_path.string() + ":" + std::to_string(line_no) +
                            ": expected 'relative_path,label' with label 0 or 1");
        }
        CorpusFile f;
        f.path = line.substr(0, comma);
        f.label = label_text == "1" ? 1 : 0;
        f.bytes = read_file(root / f.path);
        files.push_back(std::move(f));
    }
    return files;
}

} // namespace qcnn::data
