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

#include "qcnn/train/trainer.hpp"

#include "qcnn/core/error.hpp"

#include <chrono>
#include <numbers>
#include <numeric>
#include <string>

namespace qcnn::train {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_matching(const model::Architecture &arch, const Dataset &data,
                      const char *name) {
    if (data.empty()) {
        throw SizeError(std::string("train_model: empty ") + name + " set");
    }
    if (data.num_features != arch.feature_count) {
        throw SizeError(std::string("train_model: ") + name + " set has " +
                        std::to_string(data.num_features) +
                        " features, architecture expects " +
                        std::to_string(arch.feature_count));
    }
}
} // namespace

InitMode parse_init_mode(std::string_view text) {
    if (text == "random_uniform") {
        return InitMode::RandomUniform;
    }
    if (text == "zeros") {
        return InitMode::Zeros;
    }
    if (text == "two_pi") {
        return InitMode::TwoPi;
    }
    throw ConfigError("unknown init_mode '" + std::string(text) +
                      "' (expected random_uniform, zeros or two_pi)");
}

std::string_view to_string(InitMode mode) {
    switch (mode) {
    case InitMode::RandomUniform:
        return "random_uniform";
    case InitMode::Zeros:
        return "zeros";
    case InitMode::TwoPi:
        return "two_pi";
    }
    return "?";
}

void TrainConfig::validate() const {
    if (epochs <= 0) {
        throw ConfigError("epochs must be positive");
    }
    if (learning_rate < 0.0) {
        throw ConfigError("learning_rate must be non-negative");
    }
    if (batch_size == 0) {
        throw ConfigError("batch_size must be positive");
    }
    if (!(spsb_epsilon > 0.0)) {
        throw ConfigError("spsb_epsilon must be positive");
    }
    if (!(prob_clamp > 0.0 && prob_clamp < 0.5)) {
        throw ConfigError("prob_clamp must lie in (0, 0.5)");
    }
}

model::ParameterVector init_params(const model::Architecture &arch, InitMode mode,
                                   Rng &rng) {
    model::ParameterVector p;
    p.angles.resize(arch.param_count);
    for (double &a : p.angles) {
        switch (mode) {
        case InitMode::Zeros:
            a = 0.0;
            break;
        case InitMode::TwoPi:
            a = kTwoPi;
            break;
        case InitMode::RandomUniform:
            a = rng.uniform(0.0, kTwoPi);
            break;
        }
    }
    return p;
}

Evaluation evaluate(const model::Architecture &arch, std::span<const double> params,
                    const Dataset &data, double clamp) {
    std::vector<double> p1(data.size());
    std::vector<Label> preds(data.size());
    for (std::size_t i = 0; i < data.size(); ++i) {
        p1[i] = model::forward(arch, params, data.row(i)).p1;
        preds[i] = predict(p1[i]);
    }
    Evaluation e;
    e.accuracy = accuracy(preds, data.labels);
    e.f1 = f1_score(preds, data.labels);
    e.mean_loss = cross_entropy(p1, data.labels, clamp) /
                  static_cast<double>(data.size());
    return e;
}

double batch_loss(const model::Architecture &arch, std::span<const double> params,
                  const Dataset &data, std::span<const std::size_t> rows,
                  double clamp) {
    std::vector<double> p1(rows.size());
    std::vector<Label> labels(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        p1[i] = model::forward(arch, params, data.row(rows[i])).p1;
        labels[i] = data.labels[rows[i]];
    }
    return cross_entropy(p1, labels, clamp) / static_cast<double>(rows.size());
}

TrainResult train_model(const model::Architecture &arch, const Dataset &train,
                        const Dataset &test, const TrainConfig &config,
                        const EpochCallback &on_epoch) {
    config.validate();
    require_matching(arch, train, "train");
    require_matching(arch, test, "test");

    Rng rng(config.seed);
    TrainResult result;
    result.params = init_params(arch, config.init_mode, rng);
    auto &theta = result.params.angles;

    std::vector<std::size_t> order(train.size());
    std::iota(order.begin(), order.end(), std::size_t{0});

    for (int epoch = 1; epoch <= config.epochs; ++epoch) {
        const auto start = std::chrono::steady_clock::now();
        rng.shuffle(std::span<std::size_t>(order));

        for (std::size_t begin = 0; begin < order.size(); begin += config.batch_size) {
            const std::size_t end = std::min(begin + config.batch_size, order.size());
            const std::span<const std::size_t> rows(order.data() + begin, end - begin);
            const LossFn loss = [&](std::span<const double> p) {
                return batch_loss(arch, p, train, rows, config.prob_clamp);
            };
            const auto grad = spsb_gradient(loss, theta, config.spsb_epsilon, rng);
            for (std::size_t i = 0; i < theta.size(); ++i) {
                theta[i] -= config.learning_rate * grad[i];
            }
        }

        const Evaluation tr = evaluate(arch, theta, train, config.prob_clamp);
        const Evaluation te = evaluate(arch, theta, test, config.prob_clamp);
        EpochMetrics m;
        m.epoch = epoch;
        m.train_accuracy = tr.accuracy;
        m.train_f1 = tr.f1;
        m.train_loss = tr.mean_loss;
        m.test_accuracy = te.accuracy;
        m.test_f1 = te.f1;
        m.wall_seconds = std::chrono::duration<double>(
                             std::chrono::steady_clock::now() - start)
                             .count();
        result.history.push_back(m);
        if (on_epoch) {
            on_epoch(m);
        }
    }
    return result;
}

std::vector<double> gradient_variance(const std::function<LossFn(Rng &)> &draw_loss,
                                      std::size_t dim, std::size_t num_samples,
                                      Rng &rng, double h) {
    if (num_samples == 0) {
        throw ConfigError("gradient_variance: num_samples must be positive");
    }
    std::vector<double> mean(dim, 0.0);
    std::vector<double> m2(dim, 0.0);
    std::vector<double> origin(dim);
    for (std::size_t s = 0; s < num_samples; ++s) {
        const LossFn loss = draw_loss(rng);
        for (double &v : origin) {
            v = rng.uniform(0.0, kTwoPi);
        }
        const auto g = finite_diff_gradient(loss, origin, h);
        // Welford update
        const double count = static_cast<double>(s + 1);
        for (std::size_t i = 0; i < dim; ++i) {
            const double d = g[i] - mean[i];
            mean[i] += d / count;
            m2[i] += d * (g[i] - mean[i]);
        }
    }
    for (double &v : m2) {
        v /= static_cast<double>(num_samples);
    }
    return m2;
}

std::vector<double> gradient_variance_probe(const model::Architecture &arch,
                                            std::size_t num_samples, Rng &rng) {
    auto draw = [&arch](Rng &r) -> LossFn {
        std::vector<double> features(arch.feature_count);
        for (double &x : features) {
            x = r.uniform(0.0, model::kMaxFeature);
        }
        return [&arch, features = std::move(features)](std::span<const double> p) {
            return model::forward(arch, p, features).expectation;
        };
    };
    return gradient_variance(draw, arch.param_count, num_samples, rng);
}

} // namespace qcnn::train
