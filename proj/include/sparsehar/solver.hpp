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

#include "sparsehar/config.hpp"
#include "sparsehar/dataset.hpp"
#include "sparsehar/kernels.hpp"
#include "sparsehar/model.hpp"

#include <utility>
#include <vector>

namespace sparsehar {

struct FitReport {
  // Objective after each full iteration (both half-steps).
  std::vector<double> objective_trace;
  // Data-fit term ||T^T W + O^T U - Y||_F^2 after each full iteration.
  std::vector<double> loss_trace;
  // Objective at the random initialization, before iteration 1.
  double initial_objective = 0.0;
  int iterations_run = 0;
  bool converged = false;
  double wall_time = 0.0;  // seconds
};

struct FitResult {
  Model model;
  FitReport report;
};

/// Diagonal of the reweighting matrix D_S^c: every entry of joint block j
/// equals 1 / (2 max(||w_c^j||_2, epsilon)).
Vector build_d_s(const Vector& w_c, const FeatureLayout& layout, double epsilon);

/// Diagonal of D_A^c, blockwise over the O*M attribute blocks of u_c.
Vector build_d_a(const Vector& u_c, const FeatureLayout& layout, double epsilon);

// Column c holds the diagonal of the reweighting matrix for column c of
// `weights`.
Matrix reweighting_diagonals(const Matrix& weights,
                             const std::vector<Block>& blocks, double epsilon);

/// Solves (T T^T + lambda1 D_S^c) w_c = T (y_c - O^T u_c) with a Cholesky
/// factorization. `d_s` is the diagonal of D_S^c. Throws SingularityError
/// when the system is not positive definite (lambda1 = 0, rank-deficient T).
Vector update_w_c(const Dataset& data, const Vector& u_c, const Vector& y_c,
                  const Vector& d_s, double lambda1);

/// Mirror of update_w_c: (O O^T + lambda2 D_A^c) u_c = O (y_c - T^T w_c).
Vector update_u_c(const Dataset& data, const Vector& w_c, const Vector& y_c,
                  const Vector& d_a, double lambda2);

// Products of the data that stay fixed across iterations.
class NormalEquations {
 public:
  explicit NormalEquations(const Dataset& data);

  const Matrix& skeleton_gram() const { return tt_; }     // T T^T
  const Matrix& object_gram() const { return oo_; }       // O O^T
  const Matrix& cross() const { return to_; }             // T O^T
  const Matrix& skeleton_targets() const { return ty_; }  // T Y
  const Matrix& object_targets() const { return oy_; }    // O Y

 private:
  Matrix tt_, oo_, to_, ty_, oy_;
};

// One W half-step: rebuilds D_S from `w` and solves every class column with
// U held fixed.
Matrix solve_skeleton_step(const NormalEquations& eq, const FeatureLayout& layout,
                           const Matrix& w, const Matrix& u, double lambda1,
                           double epsilon, Execution exec = Execution::parallel);

// One U half-step: rebuilds D_A from `u` and solves every class column with
// W held fixed.
Matrix solve_object_step(const NormalEquations& eq, const FeatureLayout& layout,
                         const Matrix& w, const Matrix& u, double lambda2,
                         double epsilon, Execution exec = Execution::parallel);

// Seeded standard-normal entries scaled by 0.01; W is filled before U, each
// column-major.
std::pair<Matrix, Matrix> initial_weights(const FeatureLayout& layout,
                                          Index classes, std::uint64_t seed);

// Alternating iteratively reweighted minimization of
//   ||T^T W + O^T U - Y||_F^2 + lambda1 ||W||_S + lambda2 ||U||_A.
// Each iteration builds all D_S^c and D_A^c from the current iterate, then
// updates every w_c, then every u_c. Stops on a relative objective decrease
// below config.tol or after config.max_iters iterations; non-convergence is
// reported, not thrown. The result does not depend on `exec`.
FitResult fit(const Dataset& data, const SolverConfig& config,
              Execution exec = Execution::parallel);

// ||v~|| - ||v~||^2 / (2||v||) <= ||v|| - ||v||^2 / (2||v||) + 1e-12.
// Throws InputError if ||v|| == 0 or the sizes differ.
bool check_lemma1(const Vector& v, const Vector& v_tilde);

// max over classes of the first-order residual norms
//   ||T T^T w_c + T O^T u_c - T y_c + lambda1 D_S^c w_c|| / (1 + ||w_c||)
//   ||O O^T u_c + O T^T w_c - O y_c + lambda2 D_A^c u_c|| / (1 + ||u_c||)
// with D built from the given weights.
double stationarity_residual(const Dataset& data, const Matrix& w,
                             const Matrix& u, double lambda1, double lambda2,
                             double epsilon);
double stationarity_residual(const Dataset& data, const Model& model,
                             double lambda1, double lambda2, double epsilon);

// Objective with every block norm ||x|| replaced by sqrt(||x||^2 + eps^2).
double smoothed_objective(const Dataset& data, const Matrix& w, const Matrix& u,
                          double lambda1, double lambda2, double epsilon);

struct WeightGradient {
  Matrix w;
  Matrix u;
};

// Analytic gradient of smoothed_objective with respect to W and U.
WeightGradient smoothed_gradient(const Dataset& data, const Matrix& w,
                                 const Matrix& u, double lambda1,
                                 double lambda2, double epsilon);

}  // namespace sparsehar
