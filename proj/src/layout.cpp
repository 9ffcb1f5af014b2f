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

#include "sparsehar/layout.hpp"

#include "sparsehar/error.hpp"

#include <string>

namespace sparsehar {

FeatureLayout::FeatureLayout(std::vector<Index> joint_dims, Index object_count,
                             std::vector<Index> modality_dims)
    : joint_dims_(std::move(joint_dims)),
      object_count_(object_count),
      modality_dims_(std::move(modality_dims)) {
  if (joint_dims_.empty()) throw LayoutError("layout needs at least one joint");
  if (object_count_ < 1) throw LayoutError("layout needs at least one object");
  if (modality_dims_.empty()) {
    throw LayoutError("layout needs at least one attribute modality");
  }
  for (Index d : joint_dims_) {
    if (d < 1) throw LayoutError("joint dimensions must be >= 1");
    joint_blocks_.push_back({skeleton_dim_, d});
    skeleton_dim_ += d;
  }
  for (Index d : modality_dims_) {
    if (d < 1) throw LayoutError("modality dimensions must be >= 1");
    object_stride_ += d;
  }
  for (Index o = 0; o < object_count_; ++o) {
    for (Index d : modality_dims_) {
      attribute_blocks_.push_back({object_dim_, d});
      object_dim_ += d;
    }
  }
}

const Block& FeatureLayout::joint_block(Index j) const {
  if (j < 0 || j >= joint_count()) {
    throw LayoutError("joint index " + std::to_string(j) + " out of range");
  }
  return joint_blocks_[static_cast<std::size_t>(j)];
}

const Block& FeatureLayout::attribute_block(Index object, Index modality) const {
  if (object < 0 || object >= object_count_ || modality < 0 ||
      modality >= modality_count()) {
    throw LayoutError("attribute block (" + std::to_string(object) + ", " +
                      std::to_string(modality) + ") out of range");
  }
  return attribute_blocks_[static_cast<std::size_t>(
      attribute_block_index(object, modality))];
}

FeatureLayout FeatureLayout::with_bias_joint() const {
  auto dims = joint_dims_;
  dims.push_back(1);
  return FeatureLayout(std::move(dims), object_count_, modality_dims_);
}

FeatureNames FeatureNames::defaults_for(const FeatureLayout& layout) {
  FeatureNames names;
  for (Index j = 0; j < layout.joint_count(); ++j) {
    names.joints.push_back("joint" + std::to_string(j));
  }
  for (Index o = 0; o < layout.object_count(); ++o) {
    names.objects.push_back("object" + std::to_string(o));
  }
  for (Index m = 0; m < layout.modality_count(); ++m) {
    names.modalities.push_back("modality" + std::to_string(m));
  }
  return names;
}

void FeatureNames::validate(const FeatureLayout& layout) const {
  if (static_cast<Index>(joints.size()) != layout.joint_count() ||
      static_cast<Index>(objects.size()) != layout.object_count() ||
      static_cast<Index>(modalities.size()) != layout.modality_count()) {
    throw LayoutError("feature names do not match the layout's group counts");
  }
}

void require_rows(const Matrix& m, Index expected, const char* what) {
  if (m.rows() != expected) {
    throw LayoutError(std::string(what) + " has " + std::to_string(m.rows()) +
                      " rows, layout expects " + std::to_string(expected));
  }
}

}  // namespace sparsehar
