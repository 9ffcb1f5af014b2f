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

#include <Eigen/Core>

#include <string>
#include <vector>

namespace sparsehar {

using Index = Eigen::Index;
using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// Contiguous row range [offset, offset + size) inside a feature vector.
struct Block {
  Index offset = 0;
  Index size = 0;
};

// Block structure of the two feature vectors.
//
// The skeleton vector t is the concatenation of J joint blocks with sizes
// joint_dims. The object vector o is the concatenation of object_count
// object slots, each split into the same modality blocks (modality_dims).
// Blocks inside o are ordered object-major: (o0,m0), (o0,m1), ..., (o1,m0).
class FeatureLayout {
 public:
  FeatureLayout(std::vector<Index> joint_dims, Index object_count,
                std::vector<Index> modality_dims);

  Index joint_count() const { return static_cast<Index>(joint_dims_.size()); }
  Index object_count() const { return object_count_; }
  Index modality_count() const {
    return static_cast<Index>(modality_dims_.size());
  }
  const std::vector<Index>& joint_dims() const { return joint_dims_; }
  const std::vector<Index>& modality_dims() const { return modality_dims_; }

  Index skeleton_dim() const { return skeleton_dim_; }
  Index object_dim() const { return object_dim_; }
  Index object_stride() const { return object_stride_; }

  const std::vector<Block>& joint_blocks() const { return joint_blocks_; }
  // All O*M attribute blocks in object-major order.
  const std::vector<Block>& attribute_blocks() const {
    return attribute_blocks_;
  }
  const Block& joint_block(Index j) const;
  const Block& attribute_block(Index object, Index modality) const;
  Index attribute_block_index(Index object, Index modality) const {
    return object * modality_count() + modality;
  }

  // Returns this layout with one extra joint of dimension 1 appended; pair
  // it with a constant-1 skeleton feature to obtain an intercept.
  FeatureLayout with_bias_joint() const;

  bool operator==(const FeatureLayout& other) const {
    return joint_dims_ == other.joint_dims_ &&
           object_count_ == other.object_count_ &&
           modality_dims_ == other.modality_dims_;
  }

 private:
  std::vector<Index> joint_dims_;
  Index object_count_;
  std::vector<Index> modality_dims_;
  Index skeleton_dim_ = 0;
  Index object_dim_ = 0;
  Index object_stride_ = 0;
  std::vector<Block> joint_blocks_;
  std::vector<Block> attribute_blocks_;
};

// Human-readable labels for the feature groups of a layout.
struct FeatureNames {
  std::vector<std::string> joints;
  std::vector<std::string> objects;
  std::vector<std::string> modalities;

  // "joint0", "object0", "modality0", ... sized to the layout.
  static FeatureNames defaults_for(const FeatureLayout& layout);
  void validate(const FeatureLayout& layout) const;
  bool operator==(const FeatureNames&) const = default;
};

// Throws LayoutError if rows != expected.
void require_rows(const Matrix& m, Index expected, const char* what);

}  // namespace sparsehar
