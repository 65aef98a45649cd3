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
#include "qcnn/data/corpus.hpp"
#include "qcnn/data/feature_cache.hpp"
#include "qcnn/data/idx.hpp"
#include "qcnn/data/image.hpp"
#include "qcnn/data/pca.hpp"
#include "qcnn/data/pipeline.hpp"
#include "qcnn/data/split.hpp"

#include <filesystem>
#include <fstream>
#include <numbers>
#include <numeric>
#include <random>
#include <set>

using namespace qcnn;
using namespace qcnn::data;
namespace fs = std::filesystem;

namespace {

constexpr double kHalfPi = std::numbers::pi / 2;

struct TempDir {
    fs::path path;
    explicit TempDir(const std::string &tag) {
        path = fs::temp_directory_path() /
               ("qcnn_test_" + tag + "_" + std::to_string(std::random_device{}()));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
};

/// Cyclic Jacobi eigensolver, reference for small symmetric matrices.
/// Returns eigenvalues descending and eigenvectors as rows.
std::pair<std::vector<double>, std::vector<std::vector<double>>>
jacobi_eigen(std::vector<std::vector<double>> a) {
    const std::size_t n = a.size();
    std::vector<std::vector<double>> v(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        v[i][i] = 1.0;
    }
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                off += a[p][q] * a[p][q];
            }
        }
        if (off < 1e-26) {
            break;
        }
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                if (std::abs(a[p][q]) < 1e-300) {
                    continue;
                }
                const double theta = (a[q][q] - a[p][p]) / (2 * a[p][q]);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1));
                const double c = 1 / std::sqrt(t * t + 1);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a[k][p], akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a[p][k], aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double vkp = v[k][p], vkq = v[k][q];
                    v[k][p] = c * vkp - s * vkq;
                    v[k][q] = s * vkp + c * vkq;
                }
            }
        }
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](auto i, auto j) { return a[i][i] > a[j][j]; });
    std::vector<double> vals;
    std::vector<std::vector<double>> vecs;
    for (const auto i : order) {
        vals.push_back(a[i][i]);
        std::vector<double> col(n);
        for (std::size_t k = 0; k < n; ++k) {
            col[k] = v[k][i];
        }
        vecs.push_back(col);
    }
    return {vals, vecs};
}

Matrix random_matrix(std::size_t rows, std::size_t cols, Rng &rng) {
    // correlated columns with a decaying spectrum
    Matrix basis(cols, cols);
    for (Eigen::Index i = 0; i < basis.size(); ++i) {
        basis.data()[i] = rng.normal();
    }
    Matrix m(rows, cols);
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            m(r, c) = rng.normal() * 3.0 / (1.0 + static_cast<double>(c));
        }
    }
    return m * basis;
}

double dot_abs(const Eigen::RowVectorXd &a, const std::vector<double> &b) {
    double s = 0.0;
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        s += a(i) * b[static_cast<std::size_t>(i)];
    }
    return std::abs(s);
}

} // namespace

TEST_SUITE("data") {

TEST_CASE("grayscale width brackets") {
    constexpr std::size_t kb = 1024;
    CHECK(grayscale_width(1) == 32);
    CHECK(grayscale_width(10 * kb - 1) == 32);
    CHECK(grayscale_width(10 * kb) == 64);
    CHECK(grayscale_width(30 * kb) == 128);
    CHECK(grayscale_width(60 * kb) == 256);
    CHECK(grayscale_width(100 * kb) == 384);
    CHECK(grayscale_width(200 * kb) == 512);
    CHECK(grayscale_width(500 * kb) == 768);
    CHECK(grayscale_width(999 * kb) == 768);
    CHECK(grayscale_width(1000 * kb) == 1024);
    CHECK(grayscale_width(50000 * kb) == 1024);
}

TEST_CASE("bytes to grayscale") {
    std::vector<std::uint8_t> bytes(64);
    std::iota(bytes.begin(), bytes.end(), 0);
    const auto img = bytes_to_grayscale(bytes);
    CHECK(img.width == 32);
    CHECK(img.height == 2);
    CHECK(img.pixels == bytes);

    const auto small = bytes_to_grayscale(std::vector<std::uint8_t>{1, 2, 3, 4, 0xFF});
    CHECK(small.width == 32);
    CHECK(small.height == 1);
    CHECK(small.at(4, 0) == 255);
    for (std::size_t x = 5; x < 32; ++x) {
        CHECK(small.at(x, 0) == 0);
    }
    CHECK_THROWS_AS(bytes_to_grayscale(std::vector<std::uint8_t>{}), DataError);

    Rng rng(1);
    std::vector<std::uint8_t> aligned(32 * 17);
    for (auto &b : aligned) {
        b = static_cast<std::uint8_t>(rng.uniform_index(256));
    }
    CHECK(bytes_to_grayscale(aligned).pixels == aligned);
}

TEST_CASE("bilinear resize") {
    const GrayImage flat(3, 5, std::vector<std::uint8_t>(15, 77));
    const auto big = resize_bilinear(flat, 64, 64);
    CHECK(big.width == 64);
    CHECK(big.pixels == std::vector<std::uint8_t>(64 * 64, 77));

    Rng rng(2);
    std::vector<std::uint8_t> px(64 * 64);
    for (auto &b : px) {
        b = static_cast<std::uint8_t>(rng.uniform_index(256));
    }
    const GrayImage same(64, 64, px);
    CHECK(resize_bilinear(same, 64, 64).pixels == px);

    // corner-aligned: source x = out_x * (2 - 1) / (4 - 1)
    const GrayImage checker(2, 2, {0, 255, 255, 0});
    const auto up = resize_bilinear(checker, 4, 4);
    const std::vector<std::uint8_t> expected{
        0,   85,  170, 255, //
        85,  113, 142, 170, //
        170, 142, 113, 85,  //
        255, 170, 85,  0,
    };
    CHECK(up.pixels == expected);

    // exact halves round up
    const GrayImage pair(2, 1, {0, 255});
    CHECK(resize_bilinear(pair, 3, 1).pixels == std::vector<std::uint8_t>{0, 128, 255});

    const GrayImage ramp(28, 28, std::vector<std::uint8_t>(28 * 28, 0));
    const auto shrunk = resize_bilinear(bytes_to_grayscale(std::vector<std::uint8_t>(5000, 9)), 64, 64);
    CHECK(shrunk.pixels.size() == 64 * 64);
    CHECK_THROWS_AS(resize_bilinear(ramp, 0, 4), SizeError);
}

TEST_CASE("idx parsing") {
    IdxImages imgs;
    imgs.count = 2;
    imgs.rows = 3;
    imgs.cols = 3;
    imgs.pixels = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18};
    const auto bytes = encode_idx_images(imgs);
    const std::vector<std::uint8_t> header{0, 0, 8, 3, 0, 0, 0, 2, 0, 0, 0, 3, 0, 0, 0, 3};
    CHECK(std::equal(header.begin(), header.end(), bytes.begin()));
    CHECK(bytes.size() == 16 + 18);

    const auto parsed = parse_idx_images(bytes);
    CHECK(parsed.count == 2);
    CHECK(parsed.rows == 3);
    CHECK(parsed.cols == 3);
    CHECK(parsed.pixels == imgs.pixels);
    CHECK(parsed.image(1)[0] == 10);

    const std::vector<std::uint8_t> labels{7, 0, 1};
    const auto lbytes = encode_idx_labels(labels);
    CHECK(lbytes[3] == 0x01);
    CHECK(parse_idx_labels(lbytes) == labels);

    CHECK_THROWS_AS(parse_idx_images(lbytes), DataError);
    CHECK_THROWS_AS(parse_idx_labels(bytes), DataError);

    auto truncated = bytes;
    truncated.pop_back();
    CHECK_THROWS_AS(parse_idx_images(truncated), DataError);
    CHECK_THROWS_AS(parse_idx_images(std::vector<std::uint8_t>{0, 0, 8}), DataError);

    // 10 declared, payload for 9
    IdxImages nine{9, 2, 2, std::vector<std::uint8_t>(36, 1)};
    auto ten = encode_idx_images(nine);
    ten[7] = 10;
    CHECK_THROWS_AS(parse_idx_images(ten), DataError);

    // rows * cols * count beyond any addressable size
    std::vector<std::uint8_t> huge{0, 0, 8, 3, 0xFF, 0xFF, 0xFF, 0xFF,
                                   0xFF, 0xFF, 0xFF, 0xFF, 0xFF, 0xFF, 0xFF, 0xFF};
    CHECK_THROWS_AS(parse_idx_images(huge), DataError);
}

TEST_CASE("idx files round trip") {
    TempDir dir("idx");
    IdxImages imgs{4, 5, 6, {}};
    Rng rng(3);
    imgs.pixels.resize(4 * 30);
    for (auto &b : imgs.pixels) {
        b = static_cast<std::uint8_t>(rng.uniform_index(256));
    }
    const auto path = dir.path / "images.idx";
    write_file_atomic(path, encode_idx_images(imgs));
    CHECK(load_idx_images(path).pixels == imgs.pixels);
    CHECK(read_file(path) == encode_idx_images(imgs));

    try {
        (void)load_idx_images(dir.path / "absent-file.idx");
        FAIL("expected a DataError");
    } catch (const DataError &e) {
        CHECK(std::string(e.what()).find("absent-file.idx") != std::string::npos);
    }
}

TEST_CASE("binary class selection") {
    const std::vector<std::uint8_t> labels{0, 1, 2, 0};
    auto sel = select_binary_classes(labels, 0, 1);
    CHECK(sel.indices == std::vector<std::size_t>{0, 1, 3});
    CHECK(sel.labels == std::vector<Label>{0, 1, 0});

    const std::vector<std::uint8_t> digits{8, 3, 0, 8, 5, 0};
    sel = select_binary_classes(digits, 0, 8);
    CHECK(sel.indices == std::vector<std::size_t>{0, 2, 3, 5});
    CHECK(sel.labels == std::vector<Label>{1, 0, 1, 0});

    CHECK_THROWS_AS(select_binary_classes(labels, 1, 1), ConfigError);
    CHECK_THROWS_AS(select_binary_classes(labels, 0, 8), DataError);
}

TEST_CASE("stratified split") {
    std::vector<Label> labels(100);
    for (std::size_t i = 0; i < 100; ++i) {
        labels[i] = i % 2 == 0 ? 0 : 1;
    }
    const auto split = stratified_split(labels, 10, 20, 5);
    REQUIRE(split.train.size() == 10);
    REQUIRE(split.test.size() == 20);
    auto count_ones = [&](const std::vector<std::size_t> &idx) {
        std::size_t n = 0;
        for (const auto i : idx) {
            n += labels[i];
        }
        return n;
    };
    CHECK(count_ones(split.train) == 5);
    CHECK(count_ones(split.test) == 10);

    std::set<std::size_t> seen(split.train.begin(), split.train.end());
    for (const auto i : split.test) {
        CHECK(seen.insert(i).second);
    }

    const auto again = stratified_split(labels, 10, 20, 5);
    CHECK(again.train == split.train);
    CHECK(again.test == split.test);
    CHECK(stratified_split(labels, 10, 20, 6).train != split.train);

    CHECK_THROWS(stratified_split(labels, 80, 21, 5));

    // proportions within one sample on an unbalanced pool
    Rng rng(4);
    for (int t = 0; t < 30; ++t) {
        const std::size_t n = 50 + rng.uniform_index(200);
        std::vector<Label> l(n);
        std::size_t ones = 0;
        for (auto &y : l) {
            y = rng.uniform01() < 0.3 ? 1 : 0;
            ones += y;
        }
        const std::size_t n_train = 1 + rng.uniform_index(n / 2);
        const std::size_t n_test = 1 + rng.uniform_index(n - n_train);
        const auto s = stratified_split(l, n_train, n_test, rng.next_u64());
        const double frac = static_cast<double>(ones) / static_cast<double>(n);
        std::size_t tr_ones = 0;
        for (const auto i : s.train) {
            tr_ones += l[i];
        }
        CHECK(std::abs(static_cast<double>(tr_ones) - frac * static_cast<double>(n_train)) <= 1.0);
    }
}

TEST_CASE("pca on rank-1 data") {
    Matrix m(6, 2);
    for (Eigen::Index i = 0; i < 6; ++i) {
        const double t = static_cast<double>(i) - 2.0;
        m(i, 0) = t;
        m(i, 1) = 2 * t;
    }
    const auto model = pca_fit(m, 1);
    CHECK(model.components(0, 0) == doctest::Approx(1 / std::sqrt(5.0)));
    CHECK(model.components(0, 1) == doctest::Approx(2 / std::sqrt(5.0)));
    const Eigen::RowVectorXd centered0 = m.colwise().mean();
    const double total = (m.rowwise() - centered0).squaredNorm() / (m.rows() - 1.0);
    CHECK(model.explained_variance(0) == doctest::Approx(total));

    const Matrix z = pca_transform(model, m);
    for (Eigen::Index i = 0; i < 6; ++i) {
        const double t = static_cast<double>(i) - 2.5;
        CHECK(z(i, 0) == doctest::Approx(t * std::sqrt(5.0)));
    }
    const Matrix mean_row = model.mean.transpose();
    CHECK(pca_transform(model, mean_row).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("pca on isotropic gaussian sample") {
    Rng rng(5);
    Matrix m(4000, 2);
    for (Eigen::Index i = 0; i < m.size(); ++i) {
        m.data()[i] = rng.normal();
    }
    const auto model = pca_fit(m, 2);
    const Matrix gram = model.components * model.components.transpose();
    CHECK((gram - Matrix::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-8);
    const double ratio = model.explained_variance(1) / model.explained_variance(0);
    CHECK(ratio > 0.8);
    CHECK(ratio <= 1.0);
}

TEST_CASE("pca full rank reconstruction") {
    Rng rng(6);
    const Matrix m = random_matrix(30, 8, rng);
    const auto model = pca_fit(m, 8);
    const Matrix z = pca_transform(model, m);
    const Matrix back = (z * model.components).rowwise() + model.mean.transpose();
    CHECK((back - m).cwiseAbs().maxCoeff() < 1e-6);
    CHECK(z.colwise().mean().cwiseAbs().maxCoeff() < 1e-8);
}

TEST_CASE("pca matches jacobi reference") {
    Rng rng(7);
    const Matrix m = random_matrix(200, 12, rng);
    const Eigen::RowVectorXd mu = m.colwise().mean();
    const Matrix c = m.rowwise() - mu;
    const Matrix cov = c.transpose() * c / (m.rows() - 1.0);
    std::vector<std::vector<double>> dense(12, std::vector<double>(12));
    for (int i = 0; i < 12; ++i) {
        for (int j = 0; j < 12; ++j) {
            dense[i][j] = cov(i, j);
        }
    }
    const auto [vals, vecs] = jacobi_eigen(dense);
    for (const auto route : {EigenRoute::Dense, EigenRoute::Subspace}) {
        const auto model = pca_fit(m, 5, route);
        for (int i = 0; i < 5; ++i) {
            CHECK(model.explained_variance(i) == doctest::Approx(vals[i]).epsilon(1e-8));
            CHECK(dot_abs(model.components.row(i), vecs[i]) == doctest::Approx(1.0).epsilon(1e-7));
            // largest-magnitude entry positive
            Eigen::Index arg = 0;
            model.components.row(i).cwiseAbs().maxCoeff(&arg);
            CHECK(model.components(i, arg) > 0.0);
        }
        for (int i = 1; i < 5; ++i) {
            CHECK(model.explained_variance(i) <= model.explained_variance(i - 1));
        }
    }
}

TEST_CASE("subspace route agrees with dense route at higher dimension") {
    Rng rng(8);
    const Matrix m = random_matrix(400, 300, rng);
    const auto a = pca_fit(m, 16, EigenRoute::Dense);
    const auto b = pca_fit(m, 16, EigenRoute::Subspace);
    CHECK((a.explained_variance - b.explained_variance).cwiseAbs().maxCoeff() <
          1e-8 * a.explained_variance(0));
    CHECK((a.components - b.components).cwiseAbs().maxCoeff() < 1e-6);
    const Matrix gram = b.components * b.components.transpose();
    CHECK((gram - Matrix::Identity(16, 16)).cwiseAbs().maxCoeff() < 1e-8);
}

TEST_CASE("pca idempotence") {
    Rng rng(9);
    const Matrix m = random_matrix(300, 6, rng);
    const auto first = pca_fit(m, 4);
    const Matrix z = pca_transform(first, m);
    const auto second = pca_fit(z, 4);
    CHECK((second.components - Matrix::Identity(4, 4)).cwiseAbs().maxCoeff() < 1e-8);
    CHECK((second.explained_variance - first.explained_variance).cwiseAbs().maxCoeff() <
          1e-8 * first.explained_variance(0));
}

TEST_CASE("pca errors") {
    Rng rng(10);
    const Matrix m = random_matrix(5, 8, rng);
    CHECK_THROWS_AS(pca_fit(m, 0), SizeError);
    CHECK_THROWS_AS(pca_fit(m, 5), SizeError);
    CHECK_THROWS_AS(pca_fit(m, 9), SizeError);
    CHECK_NOTHROW(pca_fit(m, 4));
    const Matrix flat = Matrix::Constant(10, 3, 2.5);
    CHECK_THROWS_AS(pca_fit(flat, 1), DataError);
}

TEST_CASE("min max scaler") {
    Matrix m(3, 2);
    m << 0, 4, 5, 4, 10, 4;
    const auto s = scale_fit(m, kHalfPi);
    const Matrix t = scale_transform(s, m);
    CHECK(t(0, 0) == 0.0);
    CHECK(t(1, 0) == doctest::Approx(kHalfPi / 2));
    CHECK(t(2, 0) == kHalfPi);
    CHECK(t.col(1).cwiseAbs().maxCoeff() == 0.0);

    Matrix test(2, 2);
    test << 12, 4, -3, 4;
    const Matrix tt = scale_transform(s, test);
    CHECK(tt(0, 0) == kHalfPi);
    CHECK(tt(1, 0) == 0.0);

    Rng rng(11);
    const Matrix r = random_matrix(100, 5, rng);
    const Matrix rt = scale_transform(scale_fit(r, kHalfPi), r);
    CHECK(rt.minCoeff() >= 0.0);
    CHECK(rt.maxCoeff() <= kHalfPi);
}

TEST_CASE("feature cache round trip") {
    Dataset d(3, {1.5, -2.0, 0.25, 3.0, 1e-300, -0.0}, {0, 1});
    const auto bytes = encode_feature_cache(d);
    CHECK(bytes.size() == 16 + 6 * 8 + 2);
    CHECK(bytes[0] == 0x4E);
    CHECK(bytes[3] == 0x51);
    CHECK(bytes[4] == 2);
    CHECK(bytes[8] == 3);
    const auto back = decode_feature_cache(bytes);
    CHECK(back.num_features == 3);
    CHECK(back.values == d.values);
    CHECK(back.labels == d.labels);

    auto bad = bytes;
    bad[0] ^= 1U;
    CHECK_THROWS_AS(decode_feature_cache(bad), DataError);
    auto cut = bytes;
    cut.pop_back();
    CHECK_THROWS_AS(decode_feature_cache(cut), DataError);

    TempDir dir("cache");
    write_feature_cache(dir.path / "f.bin", d);
    CHECK(read_feature_cache(dir.path / "f.bin").values == d.values);
}

TEST_CASE("synthetic corpus") {
    const auto files = synth_binary_corpus(10, 42);
    REQUIRE(files.size() == 20);
    std::size_t ones = 0;
    for (const auto &f : files) {
        ones += f.label;
        CHECK(f.bytes.size() >= 4 * 1024);
        CHECK(f.bytes.size() <= 64 * 1024);
    }
    CHECK(ones == 10);
    const auto again = synth_binary_corpus(10, 42);
    for (std::size_t i = 0; i < files.size(); ++i) {
        CHECK(files[i].bytes == again[i].bytes);
        CHECK(files[i].path == again[i].path);
    }
    CHECK(synth_binary_corpus(10, 43)[0].bytes != files[0].bytes);
}

TEST_CASE("synthetic corpus is separable on the first component") {
    const auto samples = corpus_samples(synth_binary_corpus(60, 5));
    const auto prepared = prepare_features(samples, 80, 40, 14, 3);
    CHECK(prepared.train.num_features == 14);
    // best single threshold on component 1, chosen on train, scored on test
    double best_acc = 0.0, best_cut = 0.0;
    bool best_above = true;
    for (std::size_t i = 0; i < prepared.train.size(); ++i) {
        const double cut = prepared.train.row(i)[0];
        for (const bool above : {true, false}) {
            std::size_t hit = 0;
            for (std::size_t j = 0; j < prepared.train.size(); ++j) {
                const bool pred = (prepared.train.row(j)[0] >= cut) == above;
                hit += pred == (prepared.train.labels[j] == 1) ? 1 : 0;
            }
            const double acc = static_cast<double>(hit) / static_cast<double>(prepared.train.size());
            if (acc > best_acc) {
                best_acc = acc;
                best_cut = cut;
                best_above = above;
            }
        }
    }
    std::size_t hit = 0;
    for (std::size_t j = 0; j < prepared.test.size(); ++j) {
        const bool pred = (prepared.test.row(j)[0] >= best_cut) == best_above;
        hit += pred == (prepared.test.labels[j] == 1) ? 1 : 0;
    }
    const double test_acc = static_cast<double>(hit) / static_cast<double>(prepared.test.size());
    MESSAGE("threshold on component 1: train " << best_acc << ", test " << test_acc);
    CHECK(test_acc > 0.5);
    for (const double v : prepared.test.values) {
        CHECK((v >= 0.0 && v <= kHalfPi));
    }
}

TEST_CASE("corpus directory round trip") {
    TempDir dir("corpus");
    const auto files = synth_binary_corpus(3, 1);
    write_corpus(dir.path, files);
    const auto loaded = load_corpus(dir.path);
    REQUIRE(loaded.size() == files.size());
    for (std::size_t i = 0; i < files.size(); ++i) {
        CHECK(loaded[i].path == files[i].path);
        CHECK(loaded[i].label == files[i].label);
        CHECK(loaded[i].bytes == files[i].bytes);
    }
    std::ifstream in(dir.path / "labels.csv");
    std::string header;
    std::getline(in, header);
    CHECK(header == "path,label");

    TempDir bad("corpus_bad");
    {
        std::ofstream out(bad.path / "labels.csv");
        out << "path,label\nx.bin,2\n";
    }
    CHECK_THROWS_AS(load_corpus(bad.path), DataError);
    TempDir missing("corpus_missing");
    CHECK_THROWS_AS(load_corpus(missing.path), DataError);
}

TEST_CASE("pipeline fits on train rows only") {
    const auto samples = corpus_samples(synth_binary_corpus(20, 9));
    CHECK(samples.dim == kImageSide * kImageSide);
    const auto p = prepare_features(samples, 24, 10, 6, 1);
    CHECK(p.train.size() == 24);
    CHECK(p.test.size() == 10);
    CHECK(p.pca.num_components() == 6);
    const Matrix train_raw = gather_rows(samples, p.train_rows);
    const Eigen::VectorXd mean = train_raw.colwise().mean().transpose();
    CHECK((mean - p.pca.mean).cwiseAbs().maxCoeff() < 1e-9);
    for (const double v : p.train.values) {
        CHECK((v >= 0.0 && v <= kHalfPi));
    }
}

} // TEST_SUITE
