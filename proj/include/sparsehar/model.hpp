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

#include "sparsehar/config.hpp"
#include "sparsehar/layout.hpp"
#include "sparsehar/transform.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sparsehar {

// Learned weights: W is d_T x C, U is d_O x C. Column c scores class c.
class Model {
 public:
  Model(FeatureLayout layout, Matrix skeleton_weights, Matrix object_weights,
        std::vector<std::string> class_names, SolverConfig hyperparams,
        std::optional<FeatureTransform> transform = std::nullopt,
        FeatureNames feature_names = {});

  const FeatureLayout& layout() const { return layout_; }
  const Matrix& skeleton_weights() const { return w_; }
  const Matrix& object_weights() const { return u_; }
  const std::vector<std::string>& class_names() const { return class_names_; }
  const SolverConfig& hyperparams() const { return hyperparams_; }
  // Input standardization applied before scoring, if the model was trained
  // on standardized features.
  const std::optional<FeatureTransform>& transform() const { return transform_; }
  const FeatureNames& feature_names() const { return feature_names_; }
  Index class_count() const { return w_.cols(); }

  // Same weights with a different input transform.
  Model with_transform(std::optional<FeatureTransform> transform) const;

  bool operator==(const Model& other) const;

 private:
  FeatureLayout layout_;
  Matrix w_;
  Matrix u_;
  std::vector<std::string> class_names_;
  SolverConfig hyperparams_;
  std::optional<FeatureTransform> transform_;
  FeatureNames feature_names_;
};

}  // namespace sparsehar
