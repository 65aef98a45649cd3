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

#include "qcnn/cli/commands.hpp"

#include "qcnn/core/error.hpp"
#include "qcnn/data/corpus.hpp"
#include "qcnn/data/feature_cache.hpp"
#include "qcnn/data/idx.hpp"
#include "qcnn/data/pipeline.hpp"
#include "qcnn/model/architecture.hpp"
#include "qcnn/sim/kernels.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <optional>
#include <ostream>
#include <sstream>

namespace qcnn::cli {

namespace {

namespace fs = std::filesystem;

std::string fixed4(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

void write_text(const fs::path &path, const std::string &text) {
    fs::create_directories(path.parent_path().empty() ? fs::path(".") : path.parent_path());
    data::write_file_atomic(
        path, {reinterpret_cast<const std::uint8_t *>(text.data()), text.size()});
}

data::RawSamples load_task_samples(const ExperimentConfig &config) {
    switch (config.task) {
    case Task::Mnist01:
        return data::load_mnist_binary(config.mnist_dir, 0, 1);
    case Task::Mnist08:
        return data::load_mnist_binary(config.mnist_dir, 0, 8);
    case Task::SyntheticMalware:
        return data::corpus_samples(
            data::synth_binary_corpus(config.synthetic_per_class, config.corpus_seed));
    case Task::CustomCorpus:
        return data::corpus_samples(data::load_corpus(config.corpus_dir));
    }
    throw ConfigError("unknown task");
}

double metric_value(const train::EpochMetrics &m, const std::string &name) {
    if (name == "train_acc") {
        return m.train_accuracy;
    }
    if (name == "train_f1") {
        return m.train_f1;
    }
    if (name == "test_acc") {
        return m.test_accuracy;
    }
    return m.test_f1;
}

std::string csv_header(std::size_t epochs, bool with_delta) {
    std::string h = "layers,uploading,metric";
    for (std::size_t e = 1; e <= epochs; ++e) {
        h += ",e" + std::to_string(e);
    }
    return h + (with_delta ? ",delta\n" : "\n");
}

std::string csv_rows(Task task, const ModelRun &run, const ModelRun *baseline) {
    std::string out;
    for (const auto &metric : metric_rows(task)) {
        out += std::to_string(run.layers) + (run.uploading ? ",with," : ",without,") + metric;
        for (const auto &m : run.history) {
            out += "," + fixed4(metric_value(m, metric));
        }
        if (baseline != nullptr) {
            out += ",";
            if (run.uploading && !run.history.empty() && !baseline->history.empty()) {
                out += fixed4(metric_value(run.history.back(), metric) -
                              metric_value(baseline->history.back(), metric));
            }
        }
        out += "\n";
    }
    return out;
}

std::size_t max_epochs(const std::vector<ModelRun> &runs) {
    std::size_t e = 0;
    for (const auto &r : runs) {
        e = std::max(e, r.history.size());
    }
    return e;
}

nlohmann::json base_manifest(const ExperimentConfig &config, std::string_view command) {
    nlohmann::json doc;
    for (const auto &[key, value] : config.to_key_values()) {
        doc[key] = value;
    }
    doc["artifact_version"] = std::string(kArtifactVersion);
    doc["command"] = std::string(command);
    doc["kernels"] = std::string(sim::active_kernels().name);
    return doc;
}

void add_run_facts(nlohmann::json &doc, const ModelRun &run, const std::string &prefix) {
    doc[prefix + "feature_count"] = std::to_string(run.feature_count);
    doc[prefix + "param_count"] = std::to_string(run.param_count);
    for (const auto &m : run.history) {
        doc[prefix + "epoch_" + std::to_string(m.epoch) + "_seconds"] = fixed4(m.wall_seconds);
    }
}

std::vector<bool> uploading_flags(UploadingMode mode) {
    switch (mode) {
    case UploadingMode::With:
        return {true};
    case UploadingMode::Without:
        return {false};
    case UploadingMode::Both:
        return {true, false};
    }
    return {};
}

} // namespace

std::size_t required_features(const ExperimentConfig &config) {
    std::size_t k = 0;
    for (const int n : config.layers) {
        for (const bool up : uploading_flags(config.uploading)) {
            k = std::max(k, model::build_architecture(n, up).feature_count);
        }
    }
    return k;
}

FeatureSplits load_features(const ExperimentConfig &config, std::size_t num_components) {
    FeatureSplits out;
    if (!config.train_cache.empty()) {
        out.train = data::read_feature_cache(config.train_cache);
        out.test = data::read_feature_cache(config.test_cache);
        if (out.train.num_features < num_components || out.test.num_features < num_components) {
            throw DataError("feature caches have fewer than " + std::to_string(num_components) +
                            " columns");
        }
        return out;
    }
    const data::RawSamples samples = load_task_samples(config);
    auto prepared = data::prepare_features(samples, config.train_size, config.test_size,
                                           num_components, config.split_seed);
    out.train = std::move(prepared.train);
    out.test = std::move(prepared.test);
    return out;
}

ModelRun run_model(const ExperimentConfig &config, int layers, bool uploading,
                   const FeatureSplits &features, std::ostream *log) {
    const auto arch = model::build_architecture(layers, uploading);
    ModelRun run;
    run.layers = layers;
    run.uploading = uploading;
    run.feature_count = arch.feature_count;
    run.param_count = arch.param_count;
    const Dataset train = features.train.leading_columns(arch.feature_count);
    const Dataset test = features.test.leading_columns(arch.feature_count);
    auto on_epoch = [&](const train::EpochMetrics &m) {
        if (log != nullptr) {
            *log << "layers=" << layers << (uploading ? " with" : " without")
                 << " epoch " << m.epoch << ": train_acc=" << fixed4(m.train_accuracy)
                 << " test_acc=" << fixed4(m.test_accuracy) << " test_f1=" << fixed4(m.test_f1)
                 << " loss=" << fixed4(m.train_loss) << " (" << fixed4(m.wall_seconds)
                 << " s)\n";
        }
    };
    run.history = train::train_model(arch, train, test, config.train, on_epoch).history;
    return run;
}

std::vector<std::string> metric_rows(Task task) {
    if (reports_train_f1(task)) {
        return {"train_acc", "train_f1", "test_acc", "test_f1"};
    }
    return {"train_acc", "test_acc", "test_f1"};
}

std::string results_csv(Task task, const std::vector<ModelRun> &runs) {
    std::string out = csv_header(max_epochs(runs), false);
    for (const auto &run : runs) {
        out += csv_rows(task, run, nullptr);
    }
    return out;
}

std::string compare_csv(Task task, const std::vector<ModelRun> &runs) {
    std::string out = csv_header(max_epochs(runs), true);
    for (const auto &run : runs) {
        const ModelRun *baseline = nullptr;
        for (const auto &other : runs) {
            if (other.layers == run.layers && !other.uploading) {
                baseline = &other;
            }
        }
        out += csv_rows(task, run, baseline != nullptr ? baseline : &run);
    }
    return out;
}

GradcheckReport run_gradcheck(const ExperimentConfig &config) {
    const auto arch = model::build_architecture(
        config.layers.front(), config.uploading != UploadingMode::Without);
    Rng rng(config.train.seed);

    std::vector<double> features(arch.feature_count);
    for (double &x : features) {
        x = rng.uniform(0.0, model::kMaxFeature);
    }
    const auto params = train::init_params(arch, train::InitMode::RandomUniform, rng);
    const Label label = 1;
    const double clamp = config.train.prob_clamp;
    const train::LossFn loss = [&](std::span<const double> p) {
        const double p1 = model::forward(arch, p, features).p1;
        return train::cross_entropy(std::span<const double>(&p1, 1),
                                    std::span<const Label>(&label, 1), clamp);
    };

    GradcheckReport report;
    report.dim = arch.param_count;
    report.draws = config.gradcheck_draws;
    report.oracle = train::finite_diff_gradient(loss, params.angles, config.gradcheck_h);
    report.spsb_mean.assign(report.dim, 0.0);
    for (std::size_t s = 0; s < config.gradcheck_draws; ++s) {
        const auto g = train::spsb_gradient(loss, params.angles, config.gradcheck_epsilon, rng);
        for (std::size_t i = 0; i < report.dim; ++i) {
            report.spsb_mean[i] += g[i];
        }
    }
    const double sign = config.gradcheck_sign_flip ? -1.0 : 1.0;
    for (double &v : report.spsb_mean) {
        v *= sign / static_cast<double>(config.gradcheck_draws);
    }
    report.relative_error = train::relative_l2_error(report.spsb_mean, report.oracle);
    report.expected_rms_error = std::sqrt(static_cast<double>(report.dim - 1) /
                                          static_cast<double>(report.draws));
    report.passed = report.relative_error < config.gradcheck_tolerance;
    report.probe_variance = train::gradient_variance_probe(arch, config.probe_samples, rng);
    return report;
}

int cmd_prepare(const ExperimentConfig &config, std::ostream &log) {
    config.validate();
    if (!config.train_cache.empty()) {
        throw ConfigError("prepare builds caches; drop train_cache/test_cache");
    }
    const std::size_t k = required_features(config);
    const data::RawSamples samples = load_task_samples(config);
    log << "loaded " << samples.size() << " samples of dimension " << samples.dim << "\n";
    const auto prepared =
        data::prepare_features(samples, config.train_size, config.test_size, k, config.split_seed);

    fs::create_directories(config.out_dir);
    data::write_feature_cache(config.out_dir / "train_features.bin", prepared.train);
    data::write_feature_cache(config.out_dir / "test_features.bin", prepared.test);

    std::ostringstream pca;
    pca << "component,explained_variance\n";
    for (Eigen::Index i = 0; i < prepared.pca.explained_variance.size(); ++i) {
        pca << (i + 1) << ',' << prepared.pca.explained_variance(i) << '\n';
    }
    write_text(config.out_dir / "pca_summary.csv", pca.str());

    std::ostringstream scaler;
    scaler << "column,min,max\n";
    for (Eigen::Index i = 0; i < prepared.scaler.min.size(); ++i) {
        scaler << (i + 1) << ',' << prepared.scaler.min(i) << ',' << prepared.scaler.max(i) << '\n';
    }
    write_text(config.out_dir / "scaler_summary.csv", scaler.str());

    auto doc = base_manifest(config, "prepare");
    doc["feature_count"] = std::to_string(k);
    doc["train_rows"] = std::to_string(prepared.train.size());
    doc["test_rows"] = std::to_string(prepared.test.size());
    write_text(config.out_dir / "manifest.json", doc.dump(2) + "\n");
    log << "wrote " << k << "-column caches to " << config.out_dir.string() << "\n";
    return kExitOk;
}

int cmd_train(const ExperimentConfig &config, std::ostream &log) {
    config.validate();
    if (config.layers.size() != 1 || config.uploading == UploadingMode::Both) {
        throw ConfigError("train runs one model: give a single layer count and uploading = true|false");
    }
    const bool uploading = config.uploading == UploadingMode::With;
    const auto features = load_features(config, required_features(config));
    const ModelRun run = run_model(config, config.layers.front(), uploading, features, &log);

    fs::create_directories(config.out_dir);
    write_text(config.out_dir / "results.csv", results_csv(config.task, {run}));
    auto doc = base_manifest(config, "train");
    add_run_facts(doc, run, "");
    write_text(config.out_dir / "manifest.json", doc.dump(2) + "\n");
    return kExitOk;
}

int cmd_compare(const ExperimentConfig &config, std::ostream &log) {
    ExperimentConfig cfg = config;
    cfg.uploading = UploadingMode::Both;
    cfg.validate();
    const auto features = load_features(cfg, required_features(cfg));

    std::vector<ModelRun> runs;
    for (const int n : cfg.layers) {
        for (const bool up : {true, false}) {
            runs.push_back(run_model(cfg, n, up, features, &log));
        }
    }
    fs::create_directories(cfg.out_dir);
    write_text(cfg.out_dir / "results.csv", compare_csv(cfg.task, runs));
    auto doc = base_manifest(cfg, "compare");
    for (const auto &run : runs) {
        add_run_facts(doc, run,
                      "model_" + std::to_string(run.layers) +
                          (run.uploading ? "_with_" : "_without_"));
    }
    write_text(cfg.out_dir / "manifest.json", doc.dump(2) + "\n");
    return kExitOk;
}

int cmd_gradcheck(const ExperimentConfig &config, std::ostream &log) {
    config.validate();
    const GradcheckReport r = run_gradcheck(config);
    log << "parameters: " << r.dim << "\n"
        << "spsb draws: " << r.draws << " (epsilon " << config.gradcheck_epsilon
        << "), oracle step " << config.gradcheck_h << "\n"
        << "relative l2 error: " << r.relative_error << " (bound "
        << config.gradcheck_tolerance << ", estimator RMS sqrt((d-1)/N) = "
        << r.expected_rms_error << ")\n"
        << "gradient variance probe (" << config.probe_samples << " samples):";
    for (const double v : r.probe_variance) {
        log << ' ' << v;
    }
    log << "\n" << (r.passed ? "PASS" : "FAIL") << "\n";
    return r.passed ? kExitOk : kExitCheckFailed;
}

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Quantum convolutional classifier experiments", "qcnn"};
    app.require_subcommand(1);

    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::string out_dir;
    std::vector<std::string> overrides;
    auto add_common = [&](CLI::App *sub) {
        sub->add_option("--config", config_path, "key = value config file or JSON manifest")
            ->required();
        sub->add_option("--seed", seed, "training seed");
        sub->add_option("--out", out_dir, "output directory");
        sub->add_option("--set", overrides, "override a config key (key=value)");
    };
    CLI::App *prepare = app.add_subcommand("prepare", "build PCA feature caches");
    CLI::App *train = app.add_subcommand("train", "train one model and log per-epoch metrics");
    CLI::App *compare = app.add_subcommand("compare", "train with and without re-uploading");
    CLI::App *gradcheck = app.add_subcommand("gradcheck", "check SPSB against finite differences");
    for (CLI::App *sub : {prepare, train, compare, gradcheck}) {
        add_common(sub);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        ExperimentConfig config = load_config(config_path);
        for (const auto &kv : overrides) {
            const auto eq = kv.find('=');
            if (eq == std::string::npos) {
                throw ConfigError("--set expects key=value, got '" + kv + "'");
            }
            config.set(kv.substr(0, eq), kv.substr(eq + 1));
        }
        if (seed) {
            config.train.seed = *seed;
        }
        if (!out_dir.empty()) {
            config.out_dir = out_dir;
        }
        if (prepare->parsed()) {
            return cmd_prepare(config, out);
        }
        if (train->parsed()) {
            return cmd_train(config, out);
        }
        if (compare->parsed()) {
            return cmd_compare(config, out);
        }
        return cmd_gradcheck(config, out);
    } catch (const ConfigError &e) {
        err << "config error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitData;
    }
}

} // namespace qcnn::cli
