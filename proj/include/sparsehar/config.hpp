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

#include <cstdint>

namespace sparsehar {

// Hyperparameters of the alternating reweighted solver.
struct SolverConfig {
  double lambda1 = 0.1;  // skeletal norm weight
  double lambda2 = 0.1;  // attribute norm weight
  // Stop when |J(i) - J(i+1)| / max(1, J(i)) < tol.
  double tol = 1e-6;
  int max_iters = 100;
  // Floor on block norms inside the reweighting matrices.
  double epsilon = 1e-8;
  std::uint64_t seed = 42;

  // Throws ConfigError naming the offending field.
  void validate() const;

  bool operator==(const SolverConfig&) const = default;
};

}  // namespace sparsehar
