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

#include <vector>

namespace sparsehar {

// Selects the serial reference kernels or their OpenMP counterparts. Both
// produce bit-identical output; the parallel versions only distribute
// independent work items (classes or instances) over threads.
enum class Execution { serial, parallel };

namespace kernels {

// Sequential dot product. The summation order is fixed so that every
// caller gets the same rounding.
inline double dot(const double* a, const double* b, Index n) {
  double s = 0.0;
  for (Index k = 0; k < n; ++k) s += a[k] * b[k];
  return s;
}

// scores[c] = t . w_c + o . u_c for one instance; returns the argmax with
// ties resolved to the lowest class index.
Index score_instance(const double* t, const double* o, const Matrix& w,
                     const Matrix& u, double* scores);

// For every column c solves (gram + lambda * diag(diag_weights.col(c))) x_c
// = rhs.col(c) by Cholesky. On failure throws the SingularityError of the
// lowest failing class.
Matrix solve_reweighted_columns_serial(const Matrix& gram,
                                       const Matrix& diag_weights,
                                       double lambda, const Matrix& rhs);
Matrix solve_reweighted_columns_openmp(const Matrix& gram,
                                       const Matrix& diag_weights,
                                       double lambda, const Matrix& rhs);

// scores is N x C, best has N entries. t is d_T x N, o is d_O x N.
void score_instances_serial(const Matrix& t, const Matrix& o, const Matrix& w,
                            const Matrix& u, Matrix& scores,
                            std::vector<Index>& best);
void score_instances_openmp(const Matrix& t, const Matrix& o, const Matrix& w,
                            const Matrix& u, Matrix& scores,
                            std::vector<Index>& best);

bool openmp_enabled();
int max_threads();

}  // namespace kernels

Matrix solve_reweighted_columns(Execution exec, const Matrix& gram,
                                const Matrix& diag_weights, double lambda,
                                const Matrix& rhs);

void score_instances(Execution exec, const Matrix& t, const Matrix& o,
                     const Matrix& w, const Matrix& u, Matrix& scores,
                     std::vector<Index>& best);

}  // namespace sparsehar
