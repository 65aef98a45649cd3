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

#include "qcnn/cli/config.hpp"

#include "qcnn/core/error.hpp"
#include "qcnn/data/idx.hpp"

#include <json.hpp>

#include <array>
#include <charconv>
#include <sstream>

namespace qcnn::cli {

namespace {

constexpr std::array kKeys = {
    "task",          "layers",         "uploading",          "train_size",
    "test_size",     "epochs",         "learning_rate",      "batch_size",
    "spsb_epsilon",  "init_mode",      "seed",               "split_seed",
    "prob_clamp",    "mnist_dir",      "corpus_dir",         "synthetic_per_class",
    "corpus_seed",   "train_cache",    "test_cache",         "out_dir",
    "gradcheck_draws", "gradcheck_epsilon", "gradcheck_h",   "gradcheck_tolerance",
    "gradcheck_sign_flip", "probe_samples",
};

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

[[noreturn]] void bad_value(std::string_view key, std::string_view value) {
    throw ConfigError("invalid value '" + std::string(value) + "' for key '" +
                      std::string(key) + "'");
}

template <class Int> Int parse_int(std::string_view key, std::string_view value) {
    Int out{};
    const auto *end = value.data() + value.size();
    const auto [ptr, ec] = std::from_chars(value.data(), end, out);
    if (ec != std::errc{} || ptr != end) {
        bad_value(key, value);
    }
    return out;
}

double parse_double(std::string_view key, std::string_view value) {
    double out = 0.0;
    const auto *end = value.data() + value.size();
    const auto [ptr, ec] = std::from_chars(value.data(), end, out);
    if (ec != std::errc{} || ptr != end) {
        bad_value(key, value);
    }
    return out;
}

bool parse_bool(std::string_view key, std::string_view value) {
    if (value == "true") {
        return true;
    }
    if (value == "false") {
        return false;
    }
    bad_value(key, value);
}

std::string format_double(double v) {
    std::array<char, 64> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return {buf.data(), ptr};
}

} // namespace

std::string_view to_string(Task task) {
    switch (task) {
    case Task::Mnist01:
        return "mnist01";
    case Task::Mnist08:
        return "mnist08";
    case Task::SyntheticMalware:
        return "synthetic_malware";
    case Task::CustomCorpus:
        return "custom_corpus";
    }
    return "?";
}

std::string_view to_string(UploadingMode mode) {
    switch (mode) {
    case UploadingMode::Without:
        return "false";
    case UploadingMode::With:
        return "true";
    case UploadingMode::Both:
        return "both";
    }
    return "?";
}

bool is_config_key(std::string_view key) {
    for (const char *k : kKeys) {
        if (key == k) {
            return true;
        }
    }
    return false;
}

void ExperimentConfig::set(std::string_view key, std::string_view value) {
    value = trim(value);
    if (key == "task") {
        if (value == "mnist01") {
            task = Task::Mnist01;
        } else if (value == "mnist08") {
            task = Task::Mnist08;
        } else if (value == "synthetic_malware") {
            task = Task::SyntheticMalware;
        } else if (value == "custom_corpus") {
            task = Task::CustomCorpus;
        } else {
            bad_value(key, value);
        }
    } else if (key == "layers") {
        layers.clear();
        std::size_t start = 0;
        while (start <= value.size()) {
            const auto comma = value.find(',', start);
            const auto item = trim(value.substr(start, comma == std::string_view::npos
                                                           ? std::string_view::npos
                                                           : comma - start));
            layers.push_back(parse_int<int>(key, item));
            if (comma == std::string_view::npos) {
                break;
            }
            start = comma + 1;
        }
    } else if (key == "uploading") {
        if (value == "true") {
            uploading = UploadingMode::With;
        } else if (value == "false") {
            uploading = UploadingMode::Without;
        } else if (value == "both") {
            uploading = UploadingMode::Both;
        } else {
            bad_value(key, value);
        }
    } else if (key == "train_size") {
        train_size = parse_int<std::size_t>(key, value);
    } else if (key == "test_size") {
        test_size = parse_int<std::size_t>(key, value);
    } else if (key == "epochs") {
        train.epochs = parse_int<int>(key, value);
    } else if (key == "learning_rate") {
        train.learning_rate = parse_double(key, value);
    } else if (key == "batch_size") {
        train.batch_size = parse_int<std::size_t>(key, value);
    } else if (key == "spsb_epsilon") {
        train.spsb_epsilon = parse_double(key, value);
    } else if (key == "init_mode") {
        train.init_mode = train::parse_init_mode(value);
    } else if (key == "seed") {
        train.seed = parse_int<std::uint64_t>(key, value);
    } else if (key == "split_seed") {
        split_seed = parse_int<std::uint64_t>(key, value);
    } else if (key == "prob_clamp") {
        train.prob_clamp = parse_double(key, value);
    } else if (key == "mnist_dir") {
        mnist_dir = std::string(value);
    } else if (key == "corpus_dir") {
        corpus_dir = std::string(value);
    } else if (key == "synthetic_per_class") {
        synthetic_per_class = parse_int<std::size_t>(key, value);
    } else if (key == "corpus_seed") {
        corpus_seed = parse_int<std::uint64_t>(key, value);
    } else if (key == "train_cache") {
        train_cache = std::string(value);
    } else if (key == "test_cache") {
        test_cache = std::string(value);
    } else if (key == "out_dir") {
        out_dir = std::string(value);
    } else if (key == "gradcheck_draws") {
        gradcheck_draws = parse_int<std::size_t>(key, value);
    } else if (key == "gradcheck_epsilon") {
        gradcheck_epsilon = parse_double(key, value);
    } else if (key == "gradcheck_h") {
        gradcheck_h = parse_double(key, value);
    } else if (key == "gradcheck_tolerance") {
        gradcheck_tolerance = parse_double(key, value);
    } else if (key == "gradcheck_sign_flip") {
        gradcheck_sign_flip = parse_bool(key, value);
    } else if (key == "probe_samples") {
        probe_samples = parse_int<std::size_t>(key, value);
    } else {
        throw ConfigError("unknown config key '" + std::string(key) + "'");
    }
}

std::map<std::string, std::string> ExperimentConfig::to_key_values() const {
    std::string layer_text;
    for (std::size_t i = 0; i < layers.size(); ++i) {
        layer_text += (i == 0 ? "" : ",") + std::to_string(layers[i]);
    }
    return {
        {"task", std::string(to_string(task))},
        {"layers", layer_text},
        {"uploading", std::string(to_string(uploading))},
        {"train_size", std::to_string(train_size)},
        {"test_size", std::to_string(test_size)},
        {"epochs", std::to_string(train.epochs)},
        {"learning_rate", format_double(train.learning_rate)},
        {"batch_size", std::to_string(train.batch_size)},
        {"spsb_epsilon", format_double(train.spsb_epsilon)},
        {"init_mode", std::string(train::to_string(train.init_mode))},
        {"seed", std::to_string(train.seed)},
        {"split_seed", std::to_string(split_seed)},
        {"prob_clamp", format_double(train.prob_clamp)},
        {"mnist_dir", mnist_dir.string()},
        {"corpus_dir", corpus_dir.string()},
        {"synthetic_per_class", std::to_string(synthetic_per_class)},
        {"corpus_seed", std::to_string(corpus_seed)},
        {"train_cache", train_cache.string()},
        {"test_cache", test_cache.string()},
        {"out_dir", out_dir.string()},
        {"gradcheck_draws", std::to_string(gradcheck_draws)},
        {"gradcheck_epsilon", format_double(gradcheck_epsilon)},
        {"gradcheck_h", format_double(gradcheck_h)},
        {"gradcheck_tolerance", format_double(gradcheck_tolerance)},
        {"gradcheck_sign_flip", gradcheck_sign_flip ? "true" : "false"},
        {"probe_samples", std::to_string(probe_samples)},
    };
}

void ExperimentConfig::validate() const {
    train.validate();
    if (layers.empty()) {
        throw ConfigError("layers must list at least one layer count");
    }
    for (const int n : layers) {
        if (n < 1 || n > 4) {
            throw ConfigError("layer count " + std::to_string(n) + " outside [1, 4]");
        }
    }
    if (train_size == 0 || test_size == 0) {
        throw ConfigError("train_size and test_size must be positive");
    }
    const bool cached = !train_cache.empty() || !test_cache.empty();
    if (cached && (train_cache.empty() || test_cache.empty())) {
        throw ConfigError("train_cache and test_cache must be given together");
    }
    if (!cached) {
        if ((task == Task::Mnist01 || task == Task::Mnist08) && mnist_dir.empty()) {
            throw ConfigError("mnist tasks need mnist_dir");
        }
        if (task == Task::CustomCorpus && corpus_dir.empty()) {
            throw ConfigError("custom_corpus needs corpus_dir");
        }
        if (task == Task::SyntheticMalware && synthetic_per_class == 0) {
            throw ConfigError("synthetic_per_class must be positive");
        }
    }
    if (gradcheck_draws == 0 || probe_samples == 0) {
        throw ConfigError("gradcheck_draws and probe_samples must be positive");
    }
    if (!(gradcheck_epsilon > 0.0) || !(gradcheck_h > 0.0) || !(gradcheck_tolerance > 0.0)) {
        throw ConfigError("gradcheck_epsilon, gradcheck_h and gradcheck_tolerance must be positive");
    }
}

ExperimentConfig parse_config_text(std::string_view text) {
    ExperimentConfig cfg;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError("config line " + std::to_string(line_no) +
                              ": expected 'key = value'");
        }
        try {
            cfg.set(trim(line.substr(0, eq)), line.substr(eq + 1));
        } catch (const ConfigError &e) {
            throw ConfigError("config line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return cfg;
}

ExperimentConfig load_config(const std::filesystem::path &path) {
    std::vector<std::uint8_t> bytes;
    try {
        bytes = data::read_file(path);
    } catch (const DataError &) {
        throw ConfigError("cannot read config file: " + path.string());
    }
    const std::string text(bytes.begin(), bytes.end());
    if (path.extension() != ".json") {
        return parse_config_text(text);
    }
    ExperimentConfig cfg;
    try {
        const auto doc = nlohmann::json::parse(text);
        for (const auto &[key, value] : doc.items()) {
            if (is_config_key(key)) {
                cfg.set(key, value.get<std::string>());
            }
        }
    } catch (const nlohmann::json::exception &e) {
        throw ConfigError("bad manifest " + path.string() + ": " + e.what());
    }
    return cfg;
}

} // namespace qcnn::cli
