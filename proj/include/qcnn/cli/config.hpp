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
 * Experiment configuration: a flat UTF-8 "key = value" file, one entry per
 * line, '#' starts a comment. A manifest.json written by a previous run is
 * accepted in place of a config file.
 *
 * Keys (defaults in brackets):
 *   task                 mnist01 | mnist08 | synthetic_malware | custom_corpus [mnist01]
 *   layers               comma list of layer counts, 1..4 [2]
 *   uploading            true | false | both [true]
 *   train_size           [10000]
 *   test_size            [4000]
 *   epochs               [5]
 *   learning_rate        [0.1]
 *   batch_size           [32]
 *   spsb_epsilon         [0.05]
 *   init_mode            random_uniform | zeros | two_pi [random_uniform]
 *   seed                 training seed: init, shuffles, perturbations [0]
 *   split_seed           data split seed [1234]
 *   prob_clamp           [1e-10]
 *   mnist_dir            directory with the MNIST IDX files
 *   corpus_dir           directory with labels.csv (custom_corpus)
 *   synthetic_per_class  files per class for synthetic_malware [700]
 *   corpus_seed          generator seed for synthetic_malware [7]
 *   train_cache          feature cache to train on instead of raw data
 *   test_cache           feature cache to test on instead of raw data
 *   out_dir              output directory [out]
 *   gradcheck_draws      SPSB estimates averaged by gradcheck [2000]
 *   gradcheck_epsilon    SPSB perturbation for gradcheck [0.001]
 *   gradcheck_h          finite-difference step for gradcheck [1e-05]
 *   gradcheck_tolerance  relative l2 bound for gradcheck [0.05]
 *   gradcheck_sign_flip  negate the estimator (self-test of the check) [false]
 *   probe_samples        draws for the gradient-variance probe [20]
 */
#pragma once

#include "qcnn/train/trainer.hpp"

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace qcnn::cli {

enum class Task { Mnist01, Mnist08, SyntheticMalware, CustomCorpus };
enum class UploadingMode { Without, With, Both };

std::string_view to_string(Task task);
std::string_view to_string(UploadingMode mode);

/// Tasks whose result grid includes the train F1 row.
inline bool reports_train_f1(Task task) {
    return task == Task::SyntheticMalware || task == Task::CustomCorpus;
}

struct ExperimentConfig {
    Task task = Task::Mnist01;
    std::vector<int> layers{2};
    UploadingMode uploading = UploadingMode::With;
    std::size_t train_size = 10000;
    std::size_t test_size = 4000;
    train::TrainConfig train;
    std::uint64_t split_seed = 1234;
    std::filesystem::path mnist_dir;
    std::filesystem::path corpus_dir;
    std::size_t synthetic_per_class = 700;
    std::uint64_t corpus_seed = 7;
    std::filesystem::path train_cache;
    std::filesystem::path test_cache;
    std::filesystem::path out_dir = "out";
    std::size_t gradcheck_draws = 2000;
    double gradcheck_epsilon = 1e-3;
    double gradcheck_h = 1e-5;
    double gradcheck_tolerance = 0.05;
    bool gradcheck_sign_flip = false;
    std::size_t probe_samples = 20;

    /// Sets one key from its textual value. Throws ConfigError on unknown keys
    /// or malformed values.
    void set(std::string_view key, std::string_view value);

    /// Every key with its canonical textual value, sorted by key.
    [[nodiscard]] std::map<std::string, std::string> to_key_values() const;

    /// Range and path checks. Throws ConfigError.
    void validate() const;
};

ExperimentConfig parse_config_text(std::string_view text);

/// Reads a key = value file, or a manifest if the name ends in .json.
ExperimentConfig load_config(const std::filesystem::path &path);

/// True for keys understood by ExperimentConfig::set.
bool is_config_key(std::string_view key);

} // namespace qcnn::cli
