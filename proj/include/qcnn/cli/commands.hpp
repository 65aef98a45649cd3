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
 * Experiment runner behind the `qcnn` command line tool.
 *
 * Outputs land in config.out_dir and are written atomically:
 *   results.csv    layers,uploading,metric,e1..eE (compare adds delta)
 *   manifest.json  flat document: resolved config keys plus run facts
 *   train_features.bin / test_features.bin, pca_summary.csv,
 *   scaler_summary.csv (prepare only)
 */
#pragma once

#include "qcnn/cli/config.hpp"
#include "qcnn/core/dataset.hpp"
#include "qcnn/train/trainer.hpp"

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace qcnn::cli {

inline constexpr std::string_view kArtifactVersion = "0.1.0";

enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 1,
    kExitData = 2,
    kExitCheckFailed = 3,
};

struct FeatureSplits {
    Dataset train;
    Dataset test;
};

/// Features with at least @p num_components columns: read from the caches
/// when configured, otherwise produced by the raw-data pipeline.
FeatureSplits load_features(const ExperimentConfig &config, std::size_t num_components);

/// Feature width a run needs: the widest architecture among the requested
/// layer counts and uploading modes.
std::size_t required_features(const ExperimentConfig &config);

struct ModelRun {
    int layers = 0;
    bool uploading = false;
    std::size_t feature_count = 0;
    std::size_t param_count = 0;
    std::vector<train::EpochMetrics> history;
};

/// Trains one architecture on the leading feature columns it consumes.
ModelRun run_model(const ExperimentConfig &config, int layers, bool uploading,
                   const FeatureSplits &features, std::ostream *log = nullptr);

/// Metric names emitted per model, in row order.
std::vector<std::string> metric_rows(Task task);

std::string results_csv(Task task, const std::vector<ModelRun> &runs);

/// Like results_csv plus a delta column: last-epoch value of the uploading
/// model minus the standard model at the same layer count (uploading rows
/// only).
std::string compare_csv(Task task, const std::vector<ModelRun> &runs);

struct GradcheckReport {
    std::size_t dim = 0;
    std::size_t draws = 0;
    double relative_error = 0.0;
    /// sqrt((d - 1) / draws): RMS relative error of the averaged estimator.
    double expected_rms_error = 0.0;
    bool passed = false;
    std::vector<double> spsb_mean;
    std::vector<double> oracle;
    std::vector<double> probe_variance;
};

/// Averaged SPSB vs central differences on a seeded single-sample loss, plus
/// the gradient-variance probe.
GradcheckReport run_gradcheck(const ExperimentConfig &config);

int cmd_prepare(const ExperimentConfig &config, std::ostream &log);
int cmd_train(const ExperimentConfig &config, std::ostream &log);
int cmd_compare(const ExperimentConfig &config, std::ostream &log);
int cmd_gradcheck(const ExperimentConfig &config, std::ostream &log);

/// Parses argv, dispatches, and maps exceptions to exit codes.
int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace qcnn::cli
