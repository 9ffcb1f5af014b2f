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

#include "sparsehar/synth.hpp"

#include "sparsehar/error.hpp"
#include "sparsehar/kernels.hpp"

#include <random>
#include <string>

namespace sparsehar {

SynthSpec SynthSpec::shared_support(FeatureLayout layout, Index classes,
                                    Index instances, double noise_sigma,
                                    Index joint, std::pair<Index, Index> block,
                                    std::uint64_t seed) {
  const auto c = static_cast<std::size_t>(classes > 0 ? classes : 0);
  SynthSpec spec{std::move(layout), classes, instances, noise_sigma,
                 std::vector<std::vector<Index>>(c, {joint}),
                 std::vector<std::vector<std::pair<Index, Index>>>(c, {block}),
                 seed};
  return spec;
}

void SynthSpec::validate() const {
  if (classes < 2) throw ConfigError("synthetic spec needs at least two classes");
  if (instances < 1) throw ConfigError("synthetic spec needs at least one instance");
  if (!(noise_sigma >= 0.0)) throw ConfigError("noise_sigma must be >= 0");
  if (static_cast<Index>(planted_joints.size()) != classes ||
      static_cast<Index>(planted_blocks.size()) != classes) {
    throw ConfigError("planted sets must have one entry per class");
  }
  for (Index c = 0; c < classes; ++c) {
    const auto& joints = planted_joints[static_cast<std::size_t>(c)];
    const auto& blocks = planted_blocks[static_cast<std::size_t>(c)];
    if (joints.empty() && blocks.empty()) {
      throw ConfigError("class " + std::to_string(c) + " has no planted block");
    }
    for (Index j : joints) {
      if (j < 0 || j >= layout.joint_count()) {
        throw ConfigError("planted joint " + std::to_string(j) + " out of range");
      }
    }
    for (auto [o, m] : blocks) {
      if (o < 0 || o >= layout.object_count() || m < 0 ||
          m >= layout.modality_count()) {
        throw ConfigError("planted block (" + std::to_string(o) + ", " +
                          std::to_string(m) + ") out of range");
      }
    }
  }
}

SynthResult generate(const SynthSpec& spec) {
  spec.validate();
  const auto& layout = spec.layout;
  std::mt19937_64 rng(spec.seed);
  std::normal_distribution<double> normal(0.0, 1.0);

  Matrix w = Matrix::Zero(layout.skeleton_dim(), spec.classes);
  Matrix u = Matrix::Zero(layout.object_dim(), spec.classes);
  for (Index c = 0; c < spec.classes; ++c) {
    for (Index j : spec.planted_joints[static_cast<std::size_t>(c)]) {
      const auto& b = layout.joint_block(j);
      for (Index k = 0; k < b.size; ++k) w(b.offset + k, c) = normal(rng);
    }
    for (auto [o, m] : spec.planted_blocks[static_cast<std::size_t>(c)]) {
      const auto& b = layout.attribute_block(o, m);
      for (Index k = 0; k < b.size; ++k) u(b.offset + k, c) = normal(rng);
    }
  }

  const Index n = spec.instances;
  Matrix t(layout.skeleton_dim(), n);
  Matrix obj(layout.object_dim(), n);
  for (Index k = 0; k < t.size(); ++k) t.data()[k] = normal(rng);
  for (Index k = 0; k < obj.size(); ++k) obj.data()[k] = normal(rng);

  std::vector<Index> labels(static_cast<std::size_t>(n));
  Vector scores(spec.classes);
  for (Index i = 0; i < n; ++i) {
    labels[static_cast<std::size_t>(i)] = kernels::score_instance(
        t.col(i).data(), obj.col(i).data(), w, u, scores.data());
  }

  if (spec.noise_sigma > 0.0) {
    for (Index k = 0; k < t.size(); ++k) t.data()[k] += spec.noise_sigma * normal(rng);
    for (Index k = 0; k < obj.size(); ++k) {
      obj.data()[k] += spec.noise_sigma * normal(rng);
    }
  }

  std::vector<std::string> names;
  for (Index c = 0; c < spec.classes; ++c) names.push_back("class" + std::to_string(c));
  return {Dataset::from_label_indices(layout, std::move(t), std::move(obj), labels,
                                      std::move(names)),
          std::move(w), std::move(u)};
}

}  // namespace sparsehar
