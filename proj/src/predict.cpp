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

#include "sparsehar/predict.hpp"

#include "sparsehar/error.hpp"

namespace sparsehar {

Prediction predict(const Model& model, const Vector& t, const Vector& o) {
  const auto& layout = model.layout();
  if (t.size() != layout.skeleton_dim() || o.size() != layout.object_dim()) {
    throw LayoutError("observation does not match the model layout");
  }
  if (!t.allFinite() || !o.allFinite()) {
    throw InputError("observation contains a non-finite value");
  }
  Prediction p;
  p.scores.resize(model.class_count());
  if (model.transform()) {
    const Vector ts = model.transform()->apply_skeleton(t);
    const Vector os = model.transform()->apply_objects(o);
    p.label = kernels::score_instance(ts.data(), os.data(),
                                      model.skeleton_weights(),
                                      model.object_weights(), p.scores.data());
  } else {
    p.label = kernels::score_instance(t.data(), o.data(),
                                      model.skeleton_weights(),
                                      model.object_weights(), p.scores.data());
  }
  return p;
}

BatchPrediction predict_observations(const Model& model, const Matrix& t,
                                     const Matrix& o, Execution exec) {
  const auto& layout = model.layout();
  require_rows(t, layout.skeleton_dim(), "skeleton matrix");
  require_rows(o, layout.object_dim(), "object matrix");
  if (t.cols() != o.cols()) {
    throw LayoutError("skeleton and object matrices disagree on N");
  }
  require_finite(t, "skeleton matrix");
  require_finite(o, "object matrix");
  BatchPrediction out;
  if (model.transform()) {
    score_instances(exec, model.transform()->apply_skeleton(t),
                    model.transform()->apply_objects(o),
                    model.skeleton_weights(), model.object_weights(),
                    out.scores, out.labels);
  } else {
    score_instances(exec, t, o, model.skeleton_weights(),
                    model.object_weights(), out.scores, out.labels);
  }
  return out;
}

BatchPrediction predict_batch(const Model& model, const Dataset& data,
                              Execution exec) {
  if (!(data.layout() == model.layout())) {
    throw LayoutError("dataset layout does not match the model layout");
  }
  if (data.class_count() != model.class_count()) {
    throw LayoutError("dataset and model disagree on the number of classes");
  }
  auto out = predict_observations(model, data.skeleton(), data.objects(), exec);
  out.accuracy = accuracy(out.labels, data.label_indices());
  return out;
}

double accuracy(const std::vector<Index>& predicted,
                const std::vector<Index>& truth) {
  if (predicted.size() != truth.size() || truth.empty()) {
    throw InputError("accuracy needs two equally sized, nonempty label lists");
  }
  std::size_t hits = 0;
  for (std::size_t i = 0; i < truth.size(); ++i) {
    if (predicted[i] == truth[i]) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(truth.size());
}

}  // namespace sparsehar
