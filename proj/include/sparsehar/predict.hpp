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
#include "sparsehar/kernels.hpp"
#include "sparsehar/model.hpp"

#include <vector>

namespace sparsehar {

struct Prediction {
  Index label = 0;
  Vector scores;  // raw affine responses t^T w_c + o^T u_c, one per class
};

// argmax_c t^T w_c + o^T u_c, lowest index on ties. If the model carries a
// feature transform it is applied to (t, o) first.
Prediction predict(const Model& model, const Vector& t, const Vector& o);

struct BatchPrediction {
  std::vector<Index> labels;
  Matrix scores;  // N x C
  // Fraction of instances whose predicted label matches the dataset label.
  double accuracy = 0.0;
};

// Scores every instance of a feature matrix pair (no labels needed).
BatchPrediction predict_observations(const Model& model, const Matrix& t,
                                     const Matrix& o,
                                     Execution exec = Execution::parallel);

BatchPrediction predict_batch(const Model& model, const Dataset& data,
                              Execution exec = Execution::parallel);

// Fraction of positions where predicted == truth.
double accuracy(const std::vector<Index>& predicted,
                const std::vector<Index>& truth);

}  // namespace sparsehar
