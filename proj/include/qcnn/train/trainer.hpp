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
 * Mini-batch training loop with SPSB updates, initialisation modes and the
 * gradient-variance diagnostic.
 */
#pragma once

#include "qcnn/core/dataset.hpp"
#include "qcnn/core/rng.hpp"
#include "qcnn/model/circuit.hpp"
#include "qcnn/train/gradient.hpp"
#include "qcnn/train/loss.hpp"

#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

namespace qcnn::train {

enum class InitMode { RandomUniform, Zeros, TwoPi };

InitMode parse_init_mode(std::string_view text);
std::string_view to_string(InitMode mode);

struct TrainConfig {
    int epochs = 5;
    double learning_rate = 0.1;
    std::size_t batch_size = 32;
    double spsb_epsilon = 0.05;
    InitMode init_mode = InitMode::RandomUniform;
    std::uint64_t seed = 0;
    double prob_clamp = kDefaultProbClamp;

    /// Throws ConfigError on non-positive sizes or clamp outside (0, 0.5).
    void validate() const;
};

struct EpochMetrics {
    int epoch = 0;
    double train_accuracy = 0.0;
    double test_accuracy = 0.0;
    double train_f1 = 0.0;
    double test_f1 = 0.0;
    double train_loss = 0.0; ///< mean per-sample cross-entropy
    double wall_seconds = 0.0;
};

struct TrainResult {
    std::vector<EpochMetrics> history;
    model::ParameterVector params;
};

/// zeros -> 0, two_pi -> 2 pi, random_uniform -> iid U[0, 2 pi).
model::ParameterVector init_params(const model::Architecture &arch, InitMode mode,
                                   Rng &rng);

struct Evaluation {
    double accuracy = 0.0;
    double f1 = 0.0;
    double mean_loss = 0.0;
};

Evaluation evaluate(const model::Architecture &arch, std::span<const double> params,
                    const Dataset &data, double clamp = kDefaultProbClamp);

/// Mean cross-entropy of @p params over the rows listed in @p rows.
double batch_loss(const model::Architecture &arch, std::span<const double> params,
                  const Dataset &data, std::span<const std::size_t> rows,
                  double clamp);

using EpochCallback = std::function<void(const EpochMetrics &)>;

/**
 * Trains from init_params for config.epochs epochs.
 *
 * One Rng seeded with config.seed is consumed in a fixed order: parameter
 * initialisation, then per epoch one shuffle of the training rows followed by
 * d Rademacher draws per batch. Results are a pure function of
 * (arch, train, test, config).
 */
TrainResult train_model(const model::Architecture &arch, const Dataset &train,
                        const Dataset &test, const TrainConfig &config,
                        const EpochCallback &on_epoch = {});

/**
 * Per-parameter population variance of finite-difference gradients over
 * @p num_samples random draws. @p draw_loss builds one random loss per call.
 */
std::vector<double> gradient_variance(const std::function<LossFn(Rng &)> &draw_loss,
                                      std::size_t dim, std::size_t num_samples,
                                      Rng &rng, double h = 1e-5);

/// gradient_variance for the circuit cost <Z>(params, features) with params
/// uniform in [0, 2 pi) and features uniform in [0, pi/2].
std::vector<double> gradient_variance_probe(const model::Architecture &arch,
                                            std::size_t num_samples, Rng &rng);

} // namespace qcnn::train
