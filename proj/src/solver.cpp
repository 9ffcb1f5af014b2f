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

#include "sparsehar/solver.hpp"

#include "sparsehar/error.hpp"
#include "sparsehar/norms.hpp"
#include "sparsehar/spd_solve.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>

namespace sparsehar {
namespace {

Vector block_reweighting(const Vector& x, const std::vector<Block>& blocks,
                         double epsilon) {
  Vector d(x.size());
  for (const auto& b : blocks) {
    const double norm = x.segment(b.offset, b.size).norm();
    d.segment(b.offset, b.size).setConstant(0.5 / std::max(norm, epsilon));
  }
  return d;
}

void require_epsilon(double epsilon) {
  if (!(epsilon > 0.0)) throw ConfigError("epsilon must be > 0");
}

void require_lambda(double lambda, const char* name) {
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
    throw ConfigError(std::string(name) + " must be a finite value >= 0");
  }
}

void require_length(const Vector& v, Index n, const char* what) {
  if (v.size() != n) {
    throw LayoutError(std::string(what) + " has length " +
                      std::to_string(v.size()) + ", expected " +
                      std::to_string(n));
  }
}

}  // namespace

Vector build_d_s(const Vector& w_c, const FeatureLayout& layout,
                 double epsilon) {
  require_length(w_c, layout.skeleton_dim(), "w_c");
  require_epsilon(epsilon);
  return block_reweighting(w_c, layout.joint_blocks(), epsilon);
}

Vector build_d_a(const Vector& u_c, const FeatureLayout& layout,
                 double epsilon) {
  require_length(u_c, layout.object_dim(), "u_c");
  require_epsilon(epsilon);
  return block_reweighting(u_c, layout.attribute_blocks(), epsilon);
}

Matrix reweighting_diagonals(const Matrix& weights,
                             const std::vector<Block>& blocks, double epsilon) {
  require_epsilon(epsilon);
  Matrix d(weights.rows(), weights.cols());
  for (Index c = 0; c < weights.cols(); ++c) {
    d.col(c) = block_reweighting(weights.col(c), blocks, epsilon);
  }
  return d;
}

Vector update_w_c(const Dataset& data, const Vector& u_c, const Vector& y_c,
                  const Vector& d_s, double lambda1) {
  const auto& layout = data.layout();
  require_length(u_c, layout.object_dim(), "u_c");
  require_length(y_c, data.size(), "y_c");
  require_length(d_s, layout.skeleton_dim(), "D_S diagonal");
  require_lambda(lambda1, "lambda1");
  const Matrix& t = data.skeleton();
  Matrix system = t * t.transpose();
  system.diagonal() += lambda1 * d_s;
  const Vector rhs = t * (y_c - data.objects().transpose() * u_c);
  return solve_spd(system, rhs, "skeleton update");
}

Vector update_u_c(const Dataset& data, const Vector& w_c, const Vector& y_c,
                  const Vector& d_a, double lambda2) {
  const auto& layout = data.layout();
  require_length(w_c, layout.skeleton_dim(), "w_c");
  require_length(y_c, data.size(), "y_c");
  require_length(d_a, layout.object_dim(), "D_A diagonal");
  require_lambda(lambda2, "lambda2");
  const Matrix& o = data.objects();
  Matrix system = o * o.transpose();
  system.diagonal() += lambda2 * d_a;
  const Vector rhs = o * (y_c - data.skeleton().transpose() * w_c);
  return solve_spd(system, rhs, "object update");
}

NormalEquations::NormalEquations(const Dataset& data) {
  const Matrix& t = data.skeleton();
  const Matrix& o = data.objects();
  tt_.noalias() = t * t.transpose();
  oo_.noalias() = o * o.transpose();
  to_.noalias() = t * o.transpose();
  ty_.noalias() = t * data.labels();
  oy_.noalias() = o * data.labels();
}

Matrix solve_skeleton_step(const NormalEquations& eq,
                           const FeatureLayout& layout, const Matrix& w,
                           const Matrix& u, double lambda1, double epsilon,
                           Execution exec) {
  const Matrix d = reweighting_diagonals(w, layout.joint_blocks(), epsilon);
  Matrix rhs = eq.skeleton_targets();
  rhs.noalias() -= eq.cross() * u;
  return solve_reweighted_columns(exec, eq.skeleton_gram(), d, lambda1, rhs);
}

Matrix solve_object_step(const NormalEquations& eq, const FeatureLayout& layout,
                         const Matrix& w, const Matrix& u, double lambda2,
                         double epsilon, Execution exec) {
  const Matrix d = reweighting_diagonals(u, layout.attribute_blocks(), epsilon);
  Matrix rhs = eq.object_targets();
  rhs.noalias() -= eq.cross().transpose() * w;
  return solve_reweighted_columns(exec, eq.object_gram(), d, lambda2, rhs);
}

std::pair<Matrix, Matrix> initial_weights(const FeatureLayout& layout,
                                          Index classes, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix w(layout.skeleton_dim(), classes);
  Matrix u(layout.object_dim(), classes);
  for (Index k = 0; k < w.size(); ++k) w.data()[k] = 0.01 * normal(rng);
  for (Index k = 0; k < u.size(); ++k) u.data()[k] = 0.01 * normal(rng);
  return {std::move(w), std::move(u)};
}

FitResult fit(const Dataset& data, const SolverConfig& config, Execution exec) {
  config.validate();
  const auto start = std::chrono::steady_clock::now();
  const auto& layout = data.layout();
  const NormalEquations eq(data);

  auto [w, u] = initial_weights(layout, data.class_count(), config.seed);
  FitReport report;
  report.initial_objective =
      objective(data, w, u, config.lambda1, config.lambda2);

  double previous = report.initial_objective;
  for (int iter = 0; iter < config.max_iters; ++iter) {
    // Both reweighting sets come from the iterate at the start of the
    // iteration; U's does not change during the W half-step.
    w = solve_skeleton_step(eq, layout, w, u, config.lambda1, config.epsilon,
                            exec);
    u = solve_object_step(eq, layout, w, u, config.lambda2, config.epsilon,
                          exec);

    const double fit_term = loss(data, w, u);
    const double current = fit_term +
                           config.lambda1 * skeletal_norm(w, layout) +
                           config.lambda2 * attribute_norm(u, layout);
    report.loss_trace.push_back(fit_term);
    report.objective_trace.push_back(current);
    ++report.iterations_run;

    if (!std::isfinite(current)) {
      throw NumericalError("objective became non-finite at iteration " +
                           std::to_string(iter + 1));
    }
    if (std::abs(previous - current) / std::max(1.0, previous) < config.tol) {
      report.converged = true;
      break;
    }
    previous = current;
  }

  report.wall_time = std::chrono::duration<double>(
                         std::chrono::steady_clock::now() - start)
                         .count();
  return {Model(layout, std::move(w), std::move(u), data.class_names(), config,
                std::nullopt, data.feature_names()),
          std::move(report)};
}

bool check_lemma1(const Vector& v, const Vector& v_tilde) {
  if (v.size() != v_tilde.size()) {
    throw InputError("check_lemma1: vectors differ in length");
  }
  const double nv = v.norm();
  if (!(nv > 0.0)) throw InputError("check_lemma1: ||v|| must be > 0");
  const double nt = v_tilde.norm();
  const double lhs = nt - nt * nt / (2.0 * nv);
  const double rhs = nv - nv * nv / (2.0 * nv);
  return lhs <= rhs + 1e-12;
}

double stationarity_residual(const Dataset& data, const Matrix& w,
                             const Matrix& u, double lambda1, double lambda2,
                             double epsilon) {
  const auto& layout = data.layout();
  require_lambda(lambda1, "lambda1");
  require_lambda(lambda2, "lambda2");
  // R = T^T W + O^T U - Y, so T R is the data part of the W gradient (halved) for every class.
  const Matrix r = residual(data, w, u);
  const Matrix gw = data.skeleton() * r;
  const Matrix gu = data.objects() * r;
  const Matrix ds = reweighting_diagonals(w, layout.joint_blocks(), epsilon);
  const Matrix da = reweighting_diagonals(u, layout.attribute_blocks(), epsilon);
  double worst = 0.0;
  for (Index c = 0; c < w.cols(); ++c) {
    const Vector rw =
        gw.col(c) + lambda1 * ds.col(c).cwiseProduct(w.col(c));
    const Vector ru =
        gu.col(c) + lambda2 * da.col(c).cwiseProduct(u.col(c));
    worst = std::max(worst, rw.norm() / (1.0 + w.col(c).norm()));
    worst = std::max(worst, ru.norm() / (1.0 + u.col(c).norm()));
  }
  return worst;
}

double stationarity_residual(const Dataset& data, const Model& model,
                             double lambda1, double lambda2, double epsilon) {
  return stationarity_residual(data, model.skeleton_weights(),
                               model.object_weights(), lambda1, lambda2,
                               epsilon);
}

namespace {

double smoothed_group_sum(const Matrix& x, const std::vector<Block>& blocks,
                          double epsilon) {
  double s = 0.0;
  for (Index c = 0; c < x.cols(); ++c) {
    for (const auto& b : blocks) {
      s += std::sqrt(x.col(c).segment(b.offset, b.size).squaredNorm() +
                     epsilon * epsilon);
    }
  }
  return s;
}

Matrix smoothed_group_gradient(const Matrix& x, const std::vector<Block>& blocks,
                               double epsilon) {
  Matrix g(x.rows(), x.cols());
  for (Index c = 0; c < x.cols(); ++c) {
    for (const auto& b : blocks) {
      const auto seg = x.col(c).segment(b.offset, b.size);
      g.col(c).segment(b.offset, b.size) =
          seg / std::sqrt(seg.squaredNorm() + epsilon * epsilon);
    }
  }
  return g;
}

}  // namespace

double smoothed_objective(const Dataset& data, const Matrix& w, const Matrix& u,
                          double lambda1, double lambda2, double epsilon) {
  require_lambda(lambda1, "lambda1");
  require_lambda(lambda2, "lambda2");
  const auto& layout = data.layout();
  return loss(data, w, u) +
         lambda1 * smoothed_group_sum(w, layout.joint_blocks(), epsilon) +
         lambda2 * smoothed_group_sum(u, layout.attribute_blocks(), epsilon);
}

WeightGradient smoothed_gradient(const Dataset& data, const Matrix& w,
                                 const Matrix& u, double lambda1,
                                 double lambda2, double epsilon) {
  const auto& layout = data.layout();
  const Matrix r = residual(data, w, u);
  WeightGradient g;
  g.w = 2.0 * data.skeleton() * r +
        lambda1 * smoothed_group_gradient(w, layout.joint_blocks(), epsilon);
  g.u = 2.0 * data.objects() * r +
        lambda2 * smoothed_group_gradient(u, layout.attribute_blocks(), epsilon);
  return g;
}

}  // namespace sparsehar
