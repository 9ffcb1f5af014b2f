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
#include "sparsehar/layout.hpp"

namespace sparsehar {

// Euclidean norm of every block of every column: result(b, c) = ||col_c[b]||.
Matrix block_norms(const Matrix& weights, const std::vector<Block>& blocks);

// sum_c sum_j ||w_c^j||_2 over the joint blocks of W (d_T x C).
double skeletal_norm(const Matrix& w, const FeatureLayout& layout);

// sum_c sum_o sum_m ||u_c^{o_m}||_2 over the attribute blocks of U (d_O x C).
double attribute_norm(const Matrix& u, const FeatureLayout& layout);

// Residual R = T^T W + O^T U - Y (N x C).
Matrix residual(const Dataset& data, const Matrix& w, const Matrix& u);

// ||T^T W + O^T U - Y||_F^2.
double loss(const Dataset& data, const Matrix& w, const Matrix& u);

// loss + lambda1 * skeletal_norm(W) + lambda2 * attribute_norm(U).
// Throws ConfigError for a negative or non-finite lambda.
double objective(const Dataset& data, const Matrix& w, const Matrix& u,
                 double lambda1, double lambda2);

}  // namespace sparsehar
