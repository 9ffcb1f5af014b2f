/*
 * Copyright 2026 The sparsehar Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "oracles.hpp"

#include "sparsehar/error.hpp"
#include "sparsehar/norms.hpp"
#include "sparsehar/predict.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

using namespace sparsehar;

namespace {

Dataset tiny_dataset(const FeatureLayout& layout, Matrix t, Matrix o,
                     std::vector<Index> labels, Index classes) {
  std::vector<std::string> names;
  for (Index c = 0; c < classes; ++c) names.push_back("c" + std::to_string(c));
  return Dataset::from_label_indices(layout, std::move(t), std::move(o), labels,
                                     names);
}

}  // namespace

TEST_CASE("layout sums block dimensions and orders attribute blocks object-major") {
  FeatureLayout layout({2, 1, 3}, 2, {2, 3});
  CHECK(layout.skeleton_dim() == 6);
  CHECK(layout.object_dim() == 10);
  CHECK(layout.joint_block(2).offset == 3);
  CHECK(layout.attribute_block(1, 0).offset == 5);
  CHECK(layout.attribute_block(1, 1).size == 3);
  CHECK(layout.attribute_blocks().size() == 4);

  CHECK_THROWS_AS(FeatureLayout({}, 1, {1}), LayoutError);
  CHECK_THROWS_AS(FeatureLayout({1, 0}, 1, {1}), LayoutError);
  CHECK_THROWS_AS(FeatureLayout({1}, 0, {1}), LayoutError);
  CHECK_THROWS_AS(FeatureLayout({1}, 1, {}), LayoutError);
  CHECK_THROWS_AS(layout.joint_block(3), LayoutError);

  const auto biased = layout.with_bias_joint();
  CHECK(biased.joint_count() == 4);
  CHECK(biased.skeleton_dim() == 7);
}

TEST_CASE("dataset validation") {
  FeatureLayout layout({1}, 1, {1});
  Matrix t(1, 2), o(1, 2);
  t << 1, 2;
  o << 3, 4;
  Matrix y(2, 2);
  y << 1, 0, 0, 1;
  CHECK_NOTHROW(Dataset(layout, t, o, y, {"a", "b"}));

  Matrix bad_y(2, 2);
  bad_y << 1, 1, 0, 1;
  CHECK_THROWS_AS(Dataset(layout, t, o, bad_y, {"a", "b"}), InputError);
  Matrix no_class(2, 2);
  no_class << 0, 0, 0, 1;
  CHECK_THROWS_AS(Dataset(layout, t, o, no_class, {"a", "b"}), InputError);
  CHECK_THROWS_AS(Dataset(layout, t, o, Matrix::Ones(2, 1), {"a"}), InputError);
  CHECK_THROWS_AS(Dataset(layout, Matrix::Ones(2, 2), o, y, {"a", "b"}), LayoutError);
  CHECK_THROWS_AS(Dataset(layout, t, Matrix::Ones(1, 3), y, {"a", "b"}), LayoutError);
  Matrix nan_t = t;
  nan_t(0, 1) = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(Dataset(layout, nan_t, o, y, {"a", "b"}), InputError);
  Matrix inf_o = o;
  inf_o(0, 0) = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(Dataset(layout, t, inf_o, y, {"a", "b"}), InputError);
}

TEST_CASE("skeletal_norm") {
  SUBCASE("zero matrix") {
    FeatureLayout layout({2, 1, 3}, 1, {1});
    CHECK(skeletal_norm(Matrix::Zero(6, 4), layout) == 0.0);
  }
  SUBCASE("single 3-4-5 block") {
    FeatureLayout layout({2, 2}, 1, {1});
    Matrix w(4, 1);
    w << 3, 4, 0, 0;
    CHECK(skeletal_norm(w, layout) == 5.0);
  }
  SUBCASE("random matrix against the summation oracle") {
    std::mt19937_64 rng(11);
    FeatureLayout layout({2, 1, 3}, 1, {1});
    for (int rep = 0; rep < 20; ++rep) {
      const Matrix w = oracle::random_matrix(6, 3, rng);
      CHECK(skeletal_norm(w, layout) ==
            doctest::Approx(oracle::skeletal_norm(w, {2, 1, 3})).epsilon(1e-14));
    }
  }
  SUBCASE("dimension mismatch") {
    FeatureLayout layout({2, 2}, 1, {1});
    CHECK_THROWS_AS(skeletal_norm(Matrix::Zero(5, 1), layout), LayoutError);
  }
}

TEST_CASE("attribute_norm") {
  SUBCASE("zero matrix") {
    FeatureLayout layout({1}, 3, {2, 2});
    CHECK(attribute_norm(Matrix::Zero(12, 2), layout) == 0.0);
  }
  SUBCASE("5 + 13") {
    FeatureLayout layout({1}, 1, {2, 2});
    Matrix u(4, 1);
    u << 3, 4, 5, 12;
    CHECK(attribute_norm(u, layout) == 18.0);
  }
  SUBCASE("random matrix against the triple-loop oracle") {
    std::mt19937_64 rng(12);
    FeatureLayout layout({1}, 3, {2, 1, 4});
    for (int rep = 0; rep < 20; ++rep) {
      const Matrix u = oracle::random_matrix(21, 4, rng);
      CHECK(attribute_norm(u, layout) ==
            doctest::Approx(oracle::attribute_norm(u, 3, {2, 1, 4})).epsilon(1e-14));
    }
  }
  SUBCASE("dimension mismatch") {
    FeatureLayout layout({1}, 2, {2});
    CHECK_THROWS_AS(attribute_norm(Matrix::Zero(3, 1), layout), LayoutError);
  }
}

TEST_CASE("loss") {
  SUBCASE("zero weights give N") {
    std::mt19937_64 rng(3);
    FeatureLayout layout({2, 3}, 2, {1, 2});
    const auto data = oracle::random_dataset(layout, 17, 4, rng);
    CHECK(loss(data, Matrix::Zero(5, 4), Matrix::Zero(6, 4)) == 17.0);
  }
  SUBCASE("scalar case (0.8 - 1)^2 with a dummy second class") {
    // C must be >= 2; the second class column contributes (0.5 + 0.3 - 0)^2
    // with the same weights, so compare the first column alone.
    FeatureLayout layout({1}, 1, {1});
    const auto data = tiny_dataset(layout, Matrix::Ones(1, 1), Matrix::Ones(1, 1),
                                   {0}, 2);
    Matrix w(1, 2), u(1, 2);
    w << 0.5, 0.0;
    u << 0.3, 0.0;
    CHECK(loss(data, w, u) == doctest::Approx(0.04).epsilon(1e-15));
  }
  SUBCASE("random instance against the element-wise oracle") {
    std::mt19937_64 rng(4);
    FeatureLayout layout({3, 3, 1}, 2, {2});
    for (int rep = 0; rep < 10; ++rep) {
      const auto data = oracle::random_dataset(layout, 9, 3, rng);
      const Matrix w = oracle::random_matrix(7, 3, rng);
      const Matrix u = oracle::random_matrix(4, 3, rng);
      CHECK(loss(data, w, u) ==
            doctest::Approx(oracle::loss(data.skeleton(), data.objects(), w, u,
                                         data.labels()))
                .epsilon(1e-12));
    }
  }
  SUBCASE("zero iff exact fit") {
    FeatureLayout layout({1}, 1, {1});
    Matrix t(1, 2), o(1, 2);
    t << 1, 0;
    o << 0, 1;
    const auto data = tiny_dataset(layout, t, o, {0, 1}, 2);
    Matrix w(1, 2), u(1, 2);
    w << 1, 0;
    u << 0, 1;
    CHECK(loss(data, w, u) == 0.0);
    w(0, 0) = 0.999;
    CHECK(loss(data, w, u) > 0.0);
  }
}

TEST_CASE("objective") {
  std::mt19937_64 rng(5);
  FeatureLayout layout({2, 2, 3}, 2, {1, 3});
  const auto data = oracle::random_dataset(layout, 12, 3, rng);
  const Matrix w = oracle::random_matrix(7, 3, rng);
  const Matrix u = oracle::random_matrix(8, 3, rng);

  CHECK(objective(data, w, u, 0.0, 0.0) == loss(data, w, u));
  CHECK(objective(data, Matrix::Zero(7, 3), Matrix::Zero(8, 3), 0.7, 2.5) == 12.0);

  const double expected =
      oracle::loss(data.skeleton(), data.objects(), w, u, data.labels()) +
      0.1 * oracle::skeletal_norm(w, {2, 2, 3}) +
      0.1 * oracle::attribute_norm(u, 2, {1, 3});
  CHECK(objective(data, w, u, 0.1, 0.1) == doctest::Approx(expected).epsilon(1e-12));

  CHECK_THROWS_AS(objective(data, w, u, -0.1, 0.1), ConfigError);
  CHECK_THROWS_AS(objective(data, w, u, 0.1, -1e-9), ConfigError);

  double last = objective(data, w, u, 0.0, 0.0);
  for (double lam : {0.01, 0.1, 1.0, 10.0}) {
    const double now = objective(data, w, u, lam, 0.5 * lam);
    CHECK(now >= last);
    last = now;
  }
}

TEST_CASE("norm properties over random draws") {
  std::mt19937_64 rng(99);
  for (int rep = 0; rep < 200; ++rep) {
    const Index joints = oracle::uniform_int(rng, 1, 6);
    std::vector<Index> dims;
    for (Index j = 0; j < joints; ++j) dims.push_back(oracle::uniform_int(rng, 1, 4));
    const Index objects = oracle::uniform_int(rng, 1, 3);
    std::vector<Index> mdims;
    for (Index m = oracle::uniform_int(rng, 1, 3); m > 0; --m)
      mdims.push_back(oracle::uniform_int(rng, 1, 3));
    FeatureLayout layout(dims, objects, mdims);
    const Index c = oracle::uniform_int(rng, 1, 5);
    const Matrix w1 = oracle::random_matrix(layout.skeleton_dim(), c, rng);
    const Matrix w2 = oracle::random_matrix(layout.skeleton_dim(), c, rng);
    const Matrix u1 = oracle::random_matrix(layout.object_dim(), c, rng);
    const Matrix u2 = oracle::random_matrix(layout.object_dim(), c, rng);
    const double alpha = std::normal_distribution<double>(0.0, 3.0)(rng);

    CHECK(skeletal_norm(w1, layout) >= 0.0);
    CHECK(skeletal_norm(alpha * w1, layout) ==
          doctest::Approx(std::abs(alpha) * skeletal_norm(w1, layout)).epsilon(1e-12));
    CHECK(attribute_norm(alpha * u1, layout) ==
          doctest::Approx(std::abs(alpha) * attribute_norm(u1, layout)).epsilon(1e-12));
    CHECK(skeletal_norm(w1 + w2, layout) <=
          skeletal_norm(w1, layout) + skeletal_norm(w2, layout) + 1e-12);
    CHECK(attribute_norm(u1 + u2, layout) <=
          attribute_norm(u1, layout) + attribute_norm(u2, layout) + 1e-12);

    // Reverse the joint order in both W and the layout.
    std::vector<Index> rdims(dims.rbegin(), dims.rend());
    FeatureLayout reversed(rdims, objects, mdims);
    Matrix wr(w1.rows(), w1.cols());
    Index at = 0;
    for (Index j = joints - 1; j >= 0; --j) {
      const auto& b = layout.joint_block(j);
      wr.middleRows(at, b.size) = w1.middleRows(b.offset, b.size);
      at += b.size;
    }
    CHECK(skeletal_norm(wr, reversed) ==
          doctest::Approx(skeletal_norm(w1, layout)).epsilon(1e-13));
  }
}

TEST_CASE("predict") {
  FeatureLayout layout({1}, 1, {1});
  SUBCASE("strict argmax") {
    Matrix w(1, 2), u(1, 2);
    w << 0.9, 0.1;
    u << 0.0, 0.0;
    Model m(layout, w, u, {"a", "b"}, {});
    const auto p = predict(m, Vector::Ones(1), Vector::Zero(1));
    CHECK(p.label == 0);
    CHECK(p.scores[0] == 0.9);
    CHECK(p.scores[1] == 0.1);
  }
  SUBCASE("all-zero weights tie to class 0") {
    Model m(layout, Matrix::Zero(1, 3), Matrix::Zero(1, 3), {"a", "b", "c"}, {});
    const auto p = predict(m, Vector::Constant(1, 2.0), Vector::Constant(1, -1.0));
    CHECK(p.label == 0);
    CHECK(p.scores.isZero());
  }
  SUBCASE("ties resolve to the lowest tied index") {
    Matrix w(1, 3), u(1, 3);
    w << 0.0, 1.0, 1.0;
    u << 0.0, 0.0, 0.0;
    Model m(layout, w, u, {"a", "b", "c"}, {});
    CHECK(predict(m, Vector::Ones(1), Vector::Zero(1)).label == 1);
  }
  SUBCASE("errors") {
    Model m(layout, Matrix::Zero(1, 2), Matrix::Zero(1, 2), {"a", "b"}, {});
    CHECK_THROWS_AS(predict(m, Vector::Ones(2), Vector::Ones(1)), LayoutError);
    CHECK_THROWS_AS(predict(m, Vector::Ones(1), Vector::Ones(3)), LayoutError);
    Vector bad = Vector::Ones(1);
    bad[0] = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(predict(m, bad, Vector::Ones(1)), InputError);
  }
  SUBCASE("random models against per-class dot products") {
    std::mt19937_64 rng(21);
    FeatureLayout big({3, 3, 2}, 2, {2, 1});
    for (int rep = 0; rep < 100; ++rep) {
      Model m(big, oracle::random_matrix(8, 4, rng), oracle::random_matrix(6, 4, rng),
              {"a", "b", "c", "d"}, {});
      const Vector t = oracle::random_vector(8, rng);
      const Vector o = oracle::random_vector(6, rng);
      const auto [label, scores] =
          oracle::argmax_scores(t, o, m.skeleton_weights(), m.object_weights());
      const auto p = predict(m, t, o);
      CHECK(p.label == label);
      for (Index c = 0; c < 4; ++c)
        CHECK(p.scores[c] == doctest::Approx(scores[static_cast<std::size_t>(c)]).epsilon(1e-13));
    }
  }
}

TEST_CASE("predict argmax invariances") {
  std::mt19937_64 rng(22);
  FeatureLayout layout({2, 2}, 1, {3});
  for (int rep = 0; rep < 50; ++rep) {
    const Matrix w = oracle::random_matrix(4, 3, rng);
    const Matrix u = oracle::random_matrix(3, 3, rng);
    const Vector t = oracle::random_vector(4, rng);
    const Vector o = oracle::random_vector(3, rng);
    const auto base = predict(Model(layout, w, u, {"a", "b", "c"}, {}), t, o);

    // A constant added to every class score: append a constant-1 bias joint
    // whose weight is identical across classes.
    const auto biased_layout = layout.with_bias_joint();
    Matrix wb(5, 3);
    wb.topRows(4) = w;
    wb.row(4).setConstant(2.5);
    Vector tb(5);
    tb << t, 1.0;
    const auto shifted = predict(Model(biased_layout, wb, u, {"a", "b", "c"}, {}), tb, o);
    CHECK(shifted.label == base.label);

    // A class-dependent shift may change the winner; a positive rescale of
    // all weights (a strictly increasing transform of every score) may not.
    const auto scaled =
        predict(Model(layout, 3.0 * w, 3.0 * u, {"a", "b", "c"}, {}), t, o);
    CHECK(scaled.label == base.label);
  }
}

TEST_CASE("predict_batch") {
  std::mt19937_64 rng(31);
  FeatureLayout layout({2, 1}, 2, {1, 2});
  SUBCASE("labels matching forced scores give accuracy 1") {
    // Each instance's skeleton feature points at its own class.
    Matrix t = Matrix::Zero(3, 3), o = Matrix::Zero(6, 3);
    t(0, 0) = 1.0;
    t(1, 1) = 1.0;
    t(2, 2) = 1.0;
    const auto data = Dataset::from_label_indices(layout, t, o, {0, 1, 2}, {"a", "b", "c"});
    Model m(layout, Matrix::Identity(3, 3), Matrix::Zero(6, 3), {"a", "b", "c"}, {});
    CHECK(predict_batch(m, data).accuracy == 1.0);
  }
  SUBCASE("batch of one matches predict") {
    const auto data = oracle::random_dataset(layout, 1, 2, rng);
    Model m(layout, oracle::random_matrix(3, 2, rng), oracle::random_matrix(6, 2, rng),
            data.class_names(), {});
    const auto b = predict_batch(m, data);
    const auto p = predict(m, data.skeleton().col(0), data.objects().col(0));
    CHECK(b.labels[0] == p.label);
    CHECK(b.scores.row(0).transpose().isApprox(p.scores, 1e-14));
  }
  SUBCASE("random data against a loop of predictions") {
    for (int rep = 0; rep < 20; ++rep) {
      const auto data = oracle::random_dataset(layout, 40, 4, rng);
      Model m(layout, oracle::random_matrix(3, 4, rng), oracle::random_matrix(6, 4, rng),
              data.class_names(), {});
      std::size_t hits = 0;
      for (Index i = 0; i < data.size(); ++i) {
        const auto [label, scores] = oracle::argmax_scores(
            data.skeleton().col(i), data.objects().col(i), m.skeleton_weights(),
            m.object_weights());
        if (label == data.label_indices()[static_cast<std::size_t>(i)]) ++hits;
      }
      CHECK(predict_batch(m, data, Execution::serial).accuracy ==
            doctest::Approx(static_cast<double>(hits) / 40.0));
    }
  }
  SUBCASE("layout mismatch") {
    const auto data = oracle::random_dataset(layout, 5, 2, rng);
    FeatureLayout other({3}, 2, {1, 2});
    Model m(other, Matrix::Zero(3, 2), Matrix::Zero(6, 2), {"c0", "c1"}, {});
    CHECK_THROWS_AS(predict_batch(m, data), LayoutError);
  }
}
