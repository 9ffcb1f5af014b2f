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

#include "sparsehar/layout.hpp"

#include <string>
#include <vector>

namespace sparsehar {

// Paired skeleton/object observations with one-hot labels.
//
// Instances are columns of skeleton() (d_T x N) and objects() (d_O x N);
// labels() is N x C with exactly one 1 per row. Immutable after
// construction; the constructor enforces every invariant.
class Dataset {
 public:
  Dataset(FeatureLayout layout, Matrix skeleton, Matrix objects, Matrix labels,
          std::vector<std::string> class_names,
          FeatureNames feature_names = {});

  static Dataset from_label_indices(FeatureLayout layout, Matrix skeleton,
                                    Matrix objects,
                                    const std::vector<Index>& label_indices,
                                    std::vector<std::string> class_names,
                                    FeatureNames feature_names = {});

  const FeatureLayout& layout() const { return layout_; }
  const Matrix& skeleton() const { return skeleton_; }
  const Matrix& objects() const { return objects_; }
  const Matrix& labels() const { return labels_; }
  const std::vector<std::string>& class_names() const { return class_names_; }
  const FeatureNames& feature_names() const { return feature_names_; }
  const std::vector<Index>& label_indices() const { return label_indices_; }

  Index size() const { return skeleton_.cols(); }
  Index class_count() const { return labels_.cols(); }

  // Instances selected by index, in the given order.
  Dataset subset(const std::vector<Index>& rows) const;

  bool operator==(const Dataset& other) const;

 private:
  FeatureLayout layout_;
  Matrix skeleton_;
  Matrix objects_;
  Matrix labels_;
  std::vector<std::string> class_names_;
  FeatureNames feature_names_;
  std::vector<Index> label_indices_;
};

// Throws InputError naming `what` if any entry is NaN or infinite.
void require_finite(const Matrix& m, const char* what);

}  // namespace sparsehar
