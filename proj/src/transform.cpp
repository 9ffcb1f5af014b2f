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

#include "sparsehar/transform.hpp"

#include "sparsehar/error.hpp"

#include <cmath>
#include <numeric>
#include <random>

namespace sparsehar {
namespace {

struct RowStats {
  Vector mean;
  Vector scale;
  std::vector<bool> constant;
};

RowStats row_stats(const Matrix& x) {
  const Index n = x.cols();
  RowStats s{x.rowwise().mean(), Vector::Ones(x.rows()),
             std::vector<bool>(static_cast<std::size_t>(x.rows()))};
  for (Index r = 0; r < x.rows(); ++r) {
    // Second pass removes the rounding left in the first mean.
    s.mean[r] += (x.row(r).array() - s.mean[r]).sum() / static_cast<double>(n);
    const double var =
        (x.row(r).array() - s.mean[r]).square().sum() / static_cast<double>(n);
    const double sd = std::sqrt(var);
    if (sd <= 1e-12 * std::max(1.0, std::abs(s.mean[r]))) {
      s.constant[static_cast<std::size_t>(r)] = true;
    } else {
      s.scale[r] = sd;
    }
  }
  return s;
}

Matrix apply_rows(const Matrix& x, const Vector& mean, const Vector& scale) {
  if (x.rows() != mean.size()) {
    throw LayoutError("feature transform does not match the data dimension");
  }
  return (x.colwise() - mean).array().colwise() / scale.array();
}

}  // namespace

Vector FeatureTransform::apply_skeleton(const Vector& t) const {
  return apply_rows(t, skeleton_mean, skeleton_scale);
}
Vector FeatureTransform::apply_objects(const Vector& o) const {
  return apply_rows(o, object_mean, object_scale);
}
Matrix FeatureTransform::apply_skeleton(const Matrix& t) const {
  return apply_rows(t, skeleton_mean, skeleton_scale);
}
Matrix FeatureTransform::apply_objects(const Matrix& o) const {
  return apply_rows(o, object_mean, object_scale);
}

Dataset FeatureTransform::apply(const Dataset& data) const {
  return Dataset(data.layout(), apply_skeleton(data.skeleton()),
                 apply_objects(data.objects()), data.labels(), data.class_names(),
                 data.feature_names());
}

std::size_t FeatureTransform::constant_feature_count() const {
  return static_cast<std::size_t>(
      std::count(skeleton_constant.begin(), skeleton_constant.end(), true) +
      std::count(object_constant.begin(), object_constant.end(), true));
}

bool FeatureTransform::operator==(const FeatureTransform& other) const {
  auto same = [](const Vector& a, const Vector& b) {
    return a.size() == b.size() && a == b;
  };
  return same(skeleton_mean, other.skeleton_mean) &&
         same(skeleton_scale, other.skeleton_scale) &&
         same(object_mean, other.object_mean) &&
         same(object_scale, other.object_scale) &&
         skeleton_constant == other.skeleton_constant &&
         object_constant == other.object_constant;
}

Standardized standardize(const Dataset& data) {
  if (data.size() < 2) {
    throw InputError("standardization needs at least two instances");
  }
  auto ts = row_stats(data.skeleton());
  auto os = row_stats(data.objects());
  FeatureTransform tr{std::move(ts.mean),     std::move(ts.scale),
                      std::move(os.mean),     std::move(os.scale),
                      std::move(ts.constant), std::move(os.constant)};
  Dataset out = tr.apply(data);
  return {std::move(out), std::move(tr)};
}

Split split(const Dataset& data, double train_fraction, std::uint64_t seed) {
  if (!(train_fraction > 0.0 && train_fraction < 1.0)) {
    throw InputError("train fraction must lie strictly between 0 and 1");
  }
  const Index n = data.size();
  const auto n_train = static_cast<Index>(
      std::llround(train_fraction * static_cast<double>(n)));
  if (n_train < 1 || n_train >= n) {
    throw InputError("split of " + std::to_string(n) + " instances at fraction " +
                     std::to_string(train_fraction) + " leaves one side empty");
  }
  std::vector<Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Index{0});
  std::mt19937_64 rng(seed);
  for (Index i = n - 1; i > 0; --i) {
    std::uniform_int_distribution<Index> pick(0, i);
    std::swap(order[static_cast<std::size_t>(i)],
              order[static_cast<std::size_t>(pick(rng))]);
  }
  std::vector<Index> train_idx(order.begin(), order.begin() + n_train);
  std::vector<Index> test_idx(order.begin() + n_train, order.end());

  auto counts = [&](const std::vector<Index>& idx) {
    std::vector<Index> k(static_cast<std::size_t>(data.class_count()), 0);
    for (Index i : idx) {
      ++k[static_cast<std::size_t>(
          data.label_indices()[static_cast<std::size_t>(i)])];
    }
    return k;
  };
  Split s{data.subset(train_idx), data.subset(test_idx), train_idx, test_idx,
          counts(train_idx), counts(test_idx)};
  return s;
}

}  // namespace sparsehar
