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
#include <utility>
#include <vector>

namespace sparsehar {

// Synthetic problem with a known sparse support.
struct SynthSpec {
  FeatureLayout layout;
  Index classes = 2;
  Index instances = 100;
  double noise_sigma = 0.0;
  // planted_joints[c]: joints carrying nonzero ground-truth weight for class c.
  std::vector<std::vector<Index>> planted_joints;
  // planted_blocks[c]: (object, modality) pairs with nonzero weight for class c.
  std::vector<std::vector<std::pair<Index, Index>>> planted_blocks;
  std::uint64_t seed = 0;

  // Same planted joint and attribute block for every class.
  static SynthSpec shared_support(FeatureLayout layout, Index classes,
                                  Index instances, double noise_sigma,
                                  Index joint, std::pair<Index, Index> block,
                                  std::uint64_t seed);

  // Throws ConfigError for out-of-range or empty planted sets.
  void validate() const;
};

struct SynthResult {
  Dataset data;
  Matrix true_skeleton_weights;  // d_T x C, zero outside planted joints
  Matrix true_object_weights;    // d_O x C, zero outside planted blocks
};

// Draws planted Gaussian weights, standard-normal features, labels each
// instance by its argmax ground-truth score, then perturbs the features
// with N(0, noise_sigma^2) noise. A pure function of the spec.
SynthResult generate(const SynthSpec& spec);

}  // namespace sparsehar
