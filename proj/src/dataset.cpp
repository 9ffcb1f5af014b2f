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

#include "sparsehar/dataset.hpp"

#include "sparsehar/error.hpp"

#include <string>

namespace sparsehar {

void require_finite(const Matrix& m, const char* what) {
  if (!m.allFinite()) {
    throw InputError(std::string(what) + " contains a non-finite value");
  }
}

Dataset::Dataset(FeatureLayout layout, Matrix skeleton, Matrix objects,
                 Matrix labels, std::vector<std::string> class_names,
                 FeatureNames feature_names)
    : layout_(std::move(layout)),
      skeleton_(std::move(skeleton)),
      objects_(std::move(objects)),
      labels_(std::move(labels)),
      class_names_(std::move(class_names)),
      feature_names_(std::move(feature_names)) {
  require_rows(skeleton_, layout_.skeleton_dim(), "skeleton matrix");
  require_rows(objects_, layout_.object_dim(), "object matrix");
  const Index n = skeleton_.cols();
  if (n < 1) throw InputError("dataset needs at least one instance");
  if (objects_.cols() != n || labels_.rows() != n) {
    throw LayoutError("skeleton, object and label matrices disagree on N");
  }
  if (labels_.cols() < 2) throw InputError("dataset needs at least two classes");
  if (static_cast<Index>(class_names_.size()) != labels_.cols()) {
    throw LayoutError("class name count does not match label columns");
  }
  if (feature_names_.joints.empty() && feature_names_.objects.empty() &&
      feature_names_.modalities.empty()) {
    feature_names_ = FeatureNames::defaults_for(layout_);
  }
  feature_names_.validate(layout_);
  require_finite(skeleton_, "skeleton matrix");
  require_finite(objects_, "object matrix");

  label_indices_.resize(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) {
    Index hot = -1;
    for (Index c = 0; c < labels_.cols(); ++c) {
      const double y = labels_(i, c);
      if (y == 1.0 && hot < 0) {
        hot = c;
      } else if (y != 0.0) {
        throw InputError("label row " + std::to_string(i) +
                         " is not a one-hot indicator");
      }
    }
    if (hot < 0) {
      throw InputError("label row " + std::to_string(i) + " has no class");
    }
    label_indices_[static_cast<std::size_t>(i)] = hot;
  }
}

Dataset Dataset::from_label_indices(FeatureLayout layout, Matrix skeleton,
                                    Matrix objects,
                                    const std::vector<Index>& label_indices,
                                    std::vector<std::string> class_names,
                                    FeatureNames feature_names) {
  const auto c = static_cast<Index>(class_names.size());
  Matrix y = Matrix::Zero(static_cast<Index>(label_indices.size()), c);
  for (std::size_t i = 0; i < label_indices.size(); ++i) {
    const Index k = label_indices[i];
    if (k < 0 || k >= c) {
      throw InputError("label index " + std::to_string(k) + " of instance " +
                       std::to_string(i) + " is outside the class set");
    }
    y(static_cast<Index>(i), k) = 1.0;
  }
  return Dataset(std::move(layout), std::move(skeleton), std::move(objects),
                 std::move(y), std::move(class_names), std::move(feature_names));
}

Dataset Dataset::subset(const std::vector<Index>& rows) const {
  const auto n = static_cast<Index>(rows.size());
  Matrix t(skeleton_.rows(), n);
  Matrix o(objects_.rows(), n);
  Matrix y(n, labels_.cols());
  for (Index k = 0; k < n; ++k) {
    const Index i = rows[static_cast<std::size_t>(k)];
    if (i < 0 || i >= size()) throw InputError("subset index out of range");
    t.col(k) = skeleton_.col(i);
    o.col(k) = objects_.col(i);
    y.row(k) = labels_.row(i);
  }
  return Dataset(layout_, std::move(t), std::move(o), std::move(y),
                 class_names_, feature_names_);
}

bool Dataset::operator==(const Dataset& other) const {
  return layout_ == other.layout_ && size() == other.size() &&
         class_count() == other.class_count() &&
         skeleton_ == other.skeleton_ && objects_ == other.objects_ &&
         labels_ == other.labels_ &&
         class_names_ == other.class_names_ &&
         feature_names_ == other.feature_names_;
}

}  // namespace sparsehar
