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

#include "sparsehar/norms.hpp"

#include "sparsehar/error.hpp"

#include <cmath>

namespace sparsehar {

Matrix block_norms(const Matrix& weights, const std::vector<Block>& blocks) {
  Matrix out(static_cast<Index>(blocks.size()), weights.cols());
  for (Index c = 0; c < weights.cols(); ++c) {
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      out(static_cast<Index>(b), c) =
          weights.col(c).segment(blocks[b].offset, blocks[b].size).norm();
    }
  }
  return out;
}

double skeletal_norm(const Matrix& w, const FeatureLayout& layout) {
  require_rows(w, layout.skeleton_dim(), "skeleton weights");
  return block_norms(w, layout.joint_blocks()).sum();
}

double attribute_norm(const Matrix& u, const FeatureLayout& layout) {
  require_rows(u, layout.object_dim(), "object weights");
  return block_norms(u, layout.attribute_blocks()).sum();
}

Matrix residual(const Dataset& data, const Matrix& w, const Matrix& u) {
  const auto& layout = data.layout();
  require_rows(w, layout.skeleton_dim(), "skeleton weights");
  require_rows(u, layout.object_dim(), "object weights");
  if (w.cols() != data.class_count() || u.cols() != data.class_count()) {
    throw LayoutError("weight matrices must have one column per class");
  }
  Matrix r = -data.labels();
  r.noalias() += data.skeleton().transpose() * w;
  r.noalias() += data.objects().transpose() * u;
  return r;
}

double loss(const Dataset& data, const Matrix& w, const Matrix& u) {
  return residual(data, w, u).squaredNorm();
}

double objective(const Dataset& data, const Matrix& w, const Matrix& u,
                 double lambda1, double lambda2) {
  if (!(lambda1 >= 0.0) || !std::isfinite(lambda1)) {
    throw ConfigError("lambda1 must be a finite value >= 0");
  }
  if (!(lambda2 >= 0.0) || !std::isfinite(lambda2)) {
    throw ConfigError("lambda2 must be a finite value >= 0");
  }
  return loss(data, w, u) + lambda1 * skeletal_norm(w, data.layout()) +
         lambda2 * attribute_norm(u, data.layout());
}

}  // namespace sparsehar
