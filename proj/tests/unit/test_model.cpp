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

#include "test_helpers.hpp"

#include "qcnn/core/error.hpp"
#include "qcnn/model/architecture.hpp"
#include "qcnn/model/circuit.hpp"

#include <numbers>
#include <numeric>

using namespace qcnn;
using namespace qcnn::model;
using qcnn::test::Cx;

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<double> random_vec(std::size_t n, double lo, double hi, Rng &rng) {
    std::vector<double> v(n);
    for (double &x : v) {
        x = rng.uniform(lo, hi);
    }
    return v;
}

/// Straight-line circuit from dense matrices: encoding, conv pairs
/// (0,1),(2,3).. then (1,2),(3,4).., pool pairs, survivors = odd positions.
double reference_expectation(int n, bool uploading, const std::vector<double> &params,
                             const std::vector<double> &features) {
    const std::size_t q = std::size_t{1} << n;
    std::vector<Cx> v(std::size_t{1} << q);
    v[0] = 1.0;
    auto apply = [&](const test::Dense &m) { v = m.apply(v); };
    auto cnot = [&](std::size_t c, std::size_t t) {
        apply(test::embed(q, t, test::ref_x(), static_cast<int>(c), 1));
    };

    std::vector<std::size_t> active(q);
    std::iota(active.begin(), active.end(), 0);
    std::size_t p = 0;
    std::size_t f = 0;
    for (int layer = 0; layer < n; ++layer) {
        const std::size_t w = active.size();
        if (layer == 0 || uploading) {
            for (std::size_t i = 0; i < w; ++i) {
                apply(test::embed(q, active[i], test::ref_ry(2 * features[f++])));
            }
        }
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        for (std::size_t i = 0; i + 1 < w; i += 2) {
            pairs.emplace_back(active[i], active[i + 1]);
        }
        for (std::size_t i = 1; i + 1 < w; i += 2) {
            pairs.emplace_back(active[i], active[i + 1]);
        }
        for (const auto &[a, b] : pairs) {
            apply(test::embed(q, a, test::ref_ry(params[p++])));
            apply(test::embed(q, b, test::ref_ry(params[p++])));
            cnot(a, b);
        }
        std::vector<std::size_t> next;
        for (std::size_t i = 0; i < w; i += 2) {
            const std::size_t c = active[i];
            const std::size_t t = active[i + 1];
            apply(test::embed(q, t, test::ref_rz(params[p++]), static_cast<int>(c), 1));
            apply(test::embed(q, t, test::ref_rx(params[p++]), static_cast<int>(c), 0));
            next.push_back(t);
        }
        active = next;
    }
    REQUIRE(active.size() == 1);
    REQUIRE(p == params.size());
    REQUIRE(f == features.size());
    double z = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        z += std::norm(v[i]) * (test::digit(i, active[0], q) == 0 ? 1.0 : -1.0);
    }
    return z;
}

} // namespace

TEST_SUITE("model") {

TEST_CASE("parameter counts") {
    const std::size_t expected[] = {4, 14, 36, 82};
    for (int n = 1; n <= 4; ++n) {
        const auto arch = build_architecture(n, true);
        CHECK(arch.param_count == expected[n - 1]);
        CHECK(closed_form_param_count(n) == expected[n - 1]);
        std::size_t from_slices = 0;
        for (const auto &s : param_slices(arch)) {
            from_slices += s.conv.size() + s.pool.size();
        }
        CHECK(from_slices == arch.param_count);
        std::size_t from_widths = 0;
        for (const auto &active : arch.active_qubits) {
            from_widths += 3 * active.size() - 2;
        }
        CHECK(from_widths == arch.param_count);
    }
    CHECK_THROWS_AS(build_architecture(0, false), SizeError);
    CHECK_THROWS_AS(build_architecture(5, true), SizeError);
}

TEST_CASE("feature budget") {
    const std::size_t uploading[] = {2, 6, 14, 30};
    const std::size_t standard[] = {2, 4, 8, 16};
    for (int n = 1; n <= 4; ++n) {
        const auto up = build_architecture(n, true);
        const auto st = build_architecture(n, false);
        CHECK(up.feature_count == uploading[n - 1]);
        CHECK(st.feature_count == standard[n - 1]);
        CHECK(std::accumulate(up.feature_blocks.begin(), up.feature_blocks.end(), std::size_t{0}) ==
              up.feature_count);
        CHECK(st.feature_blocks == std::vector<std::size_t>{st.total_qubits});
        CHECK(up.param_count == st.param_count);
    }
    const auto n3 = build_architecture(3, true);
    CHECK(n3.total_qubits == 8);
    CHECK(n3.param_count == 36);
    CHECK(n3.feature_blocks == std::vector<std::size_t>{8, 4, 2});
}

TEST_CASE("active qubits halve to the survivor") {
    const auto arch = build_architecture(3, false);
    REQUIRE(arch.active_qubits.size() == 3);
    CHECK(arch.active_qubits[0] == std::vector<std::size_t>{0, 1, 2, 3, 4, 5, 6, 7});
    CHECK(arch.active_qubits[1] == std::vector<std::size_t>{1, 3, 5, 7});
    CHECK(arch.active_qubits[2] == std::vector<std::size_t>{3, 7});
    CHECK(arch.survivor() == 7);
    CHECK(traced_qubits(arch) == std::vector<std::size_t>{0, 2, 4, 6, 1, 5, 3});
}

TEST_CASE("parameter slices") {
    const auto n2 = param_slices(build_architecture(2, true));
    REQUIRE(n2.size() == 2);
    CHECK(n2[0].conv == IndexRange{0, 6});
    CHECK(n2[0].pool == IndexRange{6, 10});
    CHECK(n2[1].conv == IndexRange{10, 12});
    CHECK(n2[1].pool == IndexRange{12, 14});

    const auto n1 = param_slices(build_architecture(1, false));
    REQUIRE(n1.size() == 1);
    CHECK(n1[0].conv == IndexRange{0, 2});
    CHECK(n1[0].pool == IndexRange{2, 4});

    for (int n = 1; n <= 4; ++n) {
        const auto arch = build_architecture(n, true);
        std::size_t cursor = 0;
        for (const auto &s : param_slices(arch)) {
            CHECK(s.conv.begin == cursor);
            CHECK(s.pool.begin == s.conv.end);
            cursor = s.pool.end;
        }
        CHECK(cursor == arch.param_count);
        cursor = 0;
        for (const auto &b : feature_slices(arch)) {
            CHECK(b.begin == cursor);
            cursor = b.end;
        }
        CHECK(cursor == arch.feature_count);
    }
}

TEST_CASE("encode examples") {
    const std::size_t q0[] = {0};
    auto s = sim::StateVector::zero(1);
    encode(s, q0, std::vector<double>{0.0});
    CHECK(std::abs(s[0] - Cx{1.0}) < 1e-15);

    s = sim::StateVector::zero(1);
    encode(s, q0, std::vector<double>{kPi / 2});
    CHECK(std::abs(s[1] - Cx{1.0}) < 1e-15);

    s = sim::StateVector::zero(1);
    encode(s, q0, std::vector<double>{kPi / 4});
    CHECK(std::abs(s.expectation_z(0)) < 1e-15);

    CHECK_THROWS_AS(encode(s, q0, std::vector<double>{0.1, 0.2}), SizeError);
    CHECK_THROWS_AS(encode(s, q0, std::vector<double>{2.0}), SizeError);
    CHECK_THROWS_AS(encode(s, q0, std::vector<double>{-0.1}), SizeError);

    // product state cos(x)|0> + sin(x)|1> per qubit
    const std::size_t qs[] = {0, 1};
    const double x0 = 0.3, x1 = 1.1;
    s = sim::StateVector::zero(2);
    encode(s, qs, std::vector<double>{x0, x1});
    CHECK(s[0].real() == doctest::Approx(std::cos(x0) * std::cos(x1)));
    CHECK(s[1].real() == doctest::Approx(std::cos(x0) * std::sin(x1)));
    CHECK(s[2].real() == doctest::Approx(std::sin(x0) * std::cos(x1)));
    CHECK(s[3].real() == doctest::Approx(std::sin(x0) * std::sin(x1)));
}

TEST_CASE("conv layer") {
    std::vector<std::size_t> active{0, 1, 2, 3, 4, 5, 6, 7};
    auto s = sim::StateVector::zero(8);
    conv_layer(s, active, std::vector<double>(14, 0.0));
    CHECK(std::abs(s[0] - Cx{1.0}) < 1e-15);
    CHECK_THROWS_AS(conv_layer(s, active, std::vector<double>(12, 0.0)), SizeError);
    std::vector<std::size_t> three{0, 1, 2};
    CHECK_THROWS_AS(conv_layer(s, three, std::vector<double>(4, 0.0)), SizeError);

    // w = 2 is one gate: RY, RY, CNOT
    const double a = 0.4, b = 1.3;
    std::vector<std::size_t> pair{0, 1};
    auto two = sim::StateVector::zero(2);
    conv_layer(two, pair, std::vector<double>{a, b});
    std::vector<Cx> v{1.0, 0.0, 0.0, 0.0};
    v = test::embed(2, 0, test::ref_ry(a)).apply(v);
    v = test::embed(2, 1, test::ref_ry(b)).apply(v);
    v = test::embed(2, 1, test::ref_x(), 0, 1).apply(v);
    CHECK(test::max_distance(two.amplitudes(), v) < 1e-14);
}

TEST_CASE("pool layer") {
    std::vector<std::size_t> pair{0, 1};
    const double t1 = 0.8, t2 = 1.9;

    // control |0>: only RX(t2) fires
    auto s = sim::StateVector::zero(2);
    auto survivors = pool_layer(s, pair, std::vector<double>{t1, t2});
    CHECK(survivors == std::vector<std::size_t>{1});
    CHECK(std::abs(s[0] - Cx{std::cos(t2 / 2)}) < 1e-14);
    CHECK(std::abs(s[1] - Cx{0, -std::sin(t2 / 2)}) < 1e-14);

    // control |1>: only RZ(t1) fires
    auto one = sim::StateVector::from_amplitudes({0.0, 0.0, 1.0, 0.0});
    pool_layer(one, pair, std::vector<double>{t1, t2});
    CHECK(std::abs(one[2] - std::polar(1.0, -t1 / 2)) < 1e-14);
    CHECK(std::abs(one[3]) < 1e-14);

    Rng rng(3);
    const auto v = test::random_state(4, rng);
    auto id = sim::StateVector::from_amplitudes(v);
    std::vector<std::size_t> four{0, 1, 2, 3};
    survivors = pool_layer(id, four, std::vector<double>(4, 0.0));
    CHECK(survivors == std::vector<std::size_t>{1, 3});
    CHECK(test::max_distance(id.amplitudes(), v) < 1e-15);

    CHECK_THROWS_AS(pool_layer(id, four, std::vector<double>(3, 0.0)), SizeError);
    std::vector<std::size_t> odd{0, 1, 2};
    CHECK_THROWS_AS(pool_layer(id, odd, std::vector<double>(3, 0.0)), SizeError);
}

TEST_CASE("forward examples") {
    const auto arch = build_architecture(1, false);
    const std::vector<double> zeros(4, 0.0);
    auto out = forward(arch, zeros, std::vector<double>{0.0, 0.0});
    CHECK(out.expectation == doctest::Approx(1.0));
    CHECK(out.p1 == doctest::Approx(0.0));

    // |11> -> CNOT -> |10> -> RZ(0) -> survivor in |0>
    out = forward(arch, zeros, std::vector<double>{kPi / 2, kPi / 2});
    CHECK(out.expectation == doctest::Approx(1.0));
    CHECK(out.p0 == doctest::Approx(1.0));

    // |01>: survivor stays |1>
    out = forward(arch, zeros, std::vector<double>{0.0, kPi / 2});
    CHECK(out.expectation == doctest::Approx(-1.0));
    CHECK(out.p1 == doctest::Approx(1.0));

    CHECK_THROWS_AS(forward(arch, std::vector<double>(3, 0.0), std::vector<double>{0, 0}),
                    SizeError);
    CHECK_THROWS_AS(forward(arch, zeros, std::vector<double>{0.0}), SizeError);
}

TEST_CASE("forward matches dense reference circuit") {
    Rng rng(1701);
    for (int n = 1; n <= 3; ++n) {
        for (const bool uploading : {false, true}) {
            const auto arch = build_architecture(n, uploading);
            const int trials = n == 3 ? 2 : 10;
            for (int t = 0; t < trials; ++t) {
                const auto params = random_vec(arch.param_count, 0, 2 * kPi, rng);
                const auto features = random_vec(arch.feature_count, 0, kPi / 2, rng);
                const auto out = forward(arch, params, features);
                CHECK(out.expectation ==
                      doctest::Approx(reference_expectation(n, uploading, params, features))
                          .epsilon(1e-11));
                CHECK(out.p0 + out.p1 == doctest::Approx(1.0).epsilon(1e-15));
            }
        }
    }
}

TEST_CASE("norm preserved through forward") {
    Rng rng(77);
    for (const int n : {2, 3}) {
        for (const bool uploading : {false, true}) {
            const auto arch = build_architecture(n, uploading);
            for (int t = 0; t < 100; ++t) {
                const auto params = random_vec(arch.param_count, 0, 2 * kPi, rng);
                const auto features = random_vec(arch.feature_count, 0, kPi / 2, rng);
                const auto state = run_circuit(arch, params, features);
                CHECK(std::abs(state.norm_squared() - 1.0) < 1e-10);
            }
        }
    }
}

TEST_CASE("pooling equals explicit partial trace") {
    Rng rng(2718);
    double worst = 0.0;
    for (const bool uploading : {false, true}) {
        const auto arch = build_architecture(2, uploading);
        const auto traced = traced_qubits(arch);
        for (int t = 0; t < 50; ++t) {
            const auto params = random_vec(arch.param_count, 0, 2 * kPi, rng);
            const auto features = random_vec(arch.feature_count, 0, kPi / 2, rng);
            const auto state = run_circuit(arch, params, features);
            const double oracle = sim::reduced_expectation_oracle(state, arch.survivor(), traced);
            worst = std::max(worst, std::abs(forward(arch, params, features).expectation - oracle));
        }
    }
    CHECK(worst < 1e-10);
}

TEST_CASE("forward is deterministic") {
    Rng rng(9);
    const auto arch = build_architecture(3, true);
    const auto params = random_vec(arch.param_count, 0, 2 * kPi, rng);
    const auto features = random_vec(arch.feature_count, 0, kPi / 2, rng);
    const auto a = forward(arch, params, features);
    const auto b = forward(arch, params, features);
    CHECK(a.expectation == b.expectation);
    CHECK(a.p1 == b.p1);
}

TEST_CASE("uploading with zero later blocks equals standard") {
    Rng rng(12);
    for (int n = 1; n <= 3; ++n) {
        const auto up = build_architecture(n, true);
        const auto st = build_architecture(n, false);
        for (int t = 0; t < 20; ++t) {
            const auto params = random_vec(up.param_count, 0, 2 * kPi, rng);
            auto features = random_vec(up.feature_count, 0, kPi / 2, rng);
            std::fill(features.begin() + static_cast<std::ptrdiff_t>(st.feature_count),
                      features.end(), 0.0);
            const std::vector<double> first(features.begin(),
                                            features.begin() +
                                                static_cast<std::ptrdiff_t>(st.feature_count));
            CHECK(std::abs(forward(up, params, features).expectation -
                           forward(st, params, first).expectation) < 1e-12);
        }
    }
}

} // TEST_SUITE
