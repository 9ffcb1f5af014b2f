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

#pragma once

#include "sparsehar/dataset.hpp"

#include <cstdint>
#include <vector>

namespace sparsehar {

// Per-feature affine map x -> (x - mean) / scale, fitted on a training set
// and replayed on any other data with the same layout.
struct FeatureTransform {
  Vector skeleton_mean;
  Vector skeleton_scale;
  Vector object_mean;
  Vector object_scale;
  // Features with zero variance: centered, scale left at 1.
  std::vector<bool> skeleton_constant;
  std::vector<bool> object_constant;

  Dataset apply(const Dataset& data) const;
  Vector apply_skeleton(const Vector& t) const;
  Vector apply_objects(const Vector& o) const;
  Matrix apply_skeleton(const Matrix& t) const;
  Matrix apply_objects(const Matrix& o) const;

  std::size_t constant_feature_count() const;
  bool operator==(const FeatureTransform& other) const;
};

struct Standardized {
  Dataset data;
  FeatureTransform transform;
};

// Zero mean, unit (population) variance per feature. Requires N >= 2.
Standardized standardize(const Dataset& data);

struct Split {
  Dataset train;
  Dataset test;
  std::vector<Index> train_indices;
  std::vector<Index> test_indices;
  std::vector<Index> train_class_counts;
  std::vector<Index> test_class_counts;
};

// Seeded shuffle, then the first round(train_fraction * N) instances go to
// train. Throws InputError if either side would be empty.
Split split(const Dataset& data, double train_fraction, std::uint64_t seed);

}  // namespace sparsehar
