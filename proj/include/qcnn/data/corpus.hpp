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
 * Labelled binary-file corpora: a synthetic generator and the on-disk
 * manifest format (directory plus labels.csv with header "path,label").
 */
#pragma once

#include "qcnn/core/dataset.hpp"

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace qcnn::data {

struct CorpusFile {
    std::string path; ///< relative to the corpus root
    std::vector<std::uint8_t> bytes;
    Label label = 0;
};

/**
 * Seeded two-class stand-in for a benign/malicious executable corpus.
 *
 * Class 0 files repeat a 16-byte low-entropy motif; class 1 files are
 * uniform random bytes behind a structured header. Sizes are uniform in
 * [4 KB, 64 KB]. Files alternate 0, 1, 0, 1, ...
 */
std::vector<CorpusFile> synth_binary_corpus(std::size_t n_per_class,
                                            std::uint64_t seed);

/// Writes every file under @p root and a labels.csv manifest.
void write_corpus(const std::filesystem::path &root,
                  const std::vector<CorpusFile> &files);

/// Reads labels.csv under @p root and loads every listed file. Throws
/// DataError on a missing manifest, a bad row, a label outside {0, 1} or a
/// missing file.
std::vector<CorpusFile> load_corpus(const std::filesystem::path &root);

} // namespace qcnn::data
