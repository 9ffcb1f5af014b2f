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

#include "sparsehar/model.hpp"

#include "sparsehar/dataset.hpp"
#include "sparsehar/error.hpp"

#include <cmath>
#include <string>

namespace sparsehar {

void SolverConfig::validate() const {
  if (!(lambda1 >= 0.0) || !std::isfinite(lambda1)) {
    throw ConfigError("lambda1 must be a finite value >= 0");
  }
  if (!(lambda2 >= 0.0) || !std::isfinite(lambda2)) {
    throw ConfigError("lambda2 must be a finite value >= 0");
  }
  if (!(tol > 0.0)) throw ConfigError("tol must be > 0");
  if (max_iters < 1) throw ConfigError("max_iters must be >= 1");
  if (!(epsilon > 0.0)) throw ConfigError("epsilon must be > 0");
}

Model::Model(FeatureLayout layout, Matrix skeleton_weights,
             Matrix object_weights, std::vector<std::string> class_names,
             SolverConfig hyperparams, std::optional<FeatureTransform> transform,
             FeatureNames feature_names)
    : layout_(std::move(layout)),
      w_(std::move(skeleton_weights)),
      u_(std::move(object_weights)),
      class_names_(std::move(class_names)),
      hyperparams_(hyperparams),
      transform_(std::move(transform)),
      feature_names_(std::move(feature_names)) {
  require_rows(w_, layout_.skeleton_dim(), "skeleton weights");
  require_rows(u_, layout_.object_dim(), "object weights");
  if (w_.cols() != u_.cols() ||
      w_.cols() != static_cast<Index>(class_names_.size())) {
    throw LayoutError("weight columns and class names disagree on C");
  }
  require_finite(w_, "skeleton weights");
  require_finite(u_, "object weights");
  if (feature_names_.joints.empty() && feature_names_.objects.empty() &&
      feature_names_.modalities.empty()) {
    feature_names_ = FeatureNames::defaults_for(layout_);
  }
  feature_names_.validate(layout_);
  if (transform_) {
    if (transform_->skeleton_mean.size() != layout_.skeleton_dim() ||
        transform_->object_mean.size() != layout_.object_dim()) {
      throw LayoutError("feature transform does not match the layout");
    }
  }
}

bool Model::operator==(const Model& other) const {
  return layout_ == other.layout_ && class_count() == other.class_count() &&
         w_ == other.w_ && u_ == other.u_ &&
         class_names_ == other.class_names_ &&
         hyperparams_ == other.hyperparams_ && transform_ == other.transform_ &&
         feature_names_ == other.feature_names_;
}

Model Model::with_transform(std::optional<FeatureTransform> transform) const {
  return Model(layout_, w_, u_, class_names_, hyperparams_, std::move(transform),
               feature_names_);
}

}  // namespace sparsehar
