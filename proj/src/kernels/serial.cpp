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

#include "sparsehar/kernels.hpp"

#include "sparsehar/spd_solve.hpp"

#include <string>

namespace sparsehar {
namespace kernels {

Index score_instance(const double* t, const double* o, const Matrix& w,
                     const Matrix& u, double* scores) {
  const Index classes = w.cols();
  Index best = 0;
  for (Index c = 0; c < classes; ++c) {
    scores[c] = dot(t, w.col(c).data(), w.rows()) +
                dot(o, u.col(c).data(), u.rows());
    if (scores[c] > scores[best]) best = c;
  }
  return best;
}

Matrix solve_reweighted_columns_serial(const Matrix& gram,
                                       const Matrix& diag_weights,
                                       double lambda, const Matrix& rhs) {
  Matrix out(rhs.rows(), rhs.cols());
  for (Index c = 0; c < rhs.cols(); ++c) {
    Matrix system = gram;
    system.diagonal() += lambda * diag_weights.col(c);
    out.col(c) =
        solve_spd(system, rhs.col(c), "class " + std::to_string(c));
  }
  return out;
}

void score_instances_serial(const Matrix& t, const Matrix& o, const Matrix& w,
                            const Matrix& u, Matrix& scores,
                            std::vector<Index>& best) {
  const Index n = t.cols();
  // Row-major scratch so each instance writes a contiguous score row.
  Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> rows(
      n, w.cols());
  best.resize(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) {
    best[static_cast<std::size_t>(i)] =
        score_instance(t.col(i).data(), o.col(i).data(), w, u, rows.row(i).data());
  }
  scores = rows;
}

}  // namespace kernels

Matrix solve_reweighted_columns(Execution exec, const Matrix& gram,
                                const Matrix& diag_weights, double lambda,
                                const Matrix& rhs) {
  return exec == Execution::parallel
             ? kernels::solve_reweighted_columns_openmp(gram, diag_weights,
                                                        lambda, rhs)
             : kernels::solve_reweighted_columns_serial(gram, diag_weights,
                                                        lambda, rhs);
}

void score_instances(Execution exec, const Matrix& t, const Matrix& o,
                     const Matrix& w, const Matrix& u, Matrix& scores,
                     std::vector<Index>& best) {
  if (exec == Execution::parallel) {
    kernels::score_instances_openmp(t, o, w, u, scores, best);
  } else {
    kernels::score_instances_serial(t, o, w, u, scores, best);
  }
}

}  // namespace sparsehar
