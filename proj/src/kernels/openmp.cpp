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

#include "sparsehar/error.hpp"
#include "sparsehar/kernels.hpp"
#include "sparsehar/spd_solve.hpp"

#include <exception>
#include <string>

#ifdef SPARSEHAR_HAVE_OPENMP
#include <omp.h>
#endif

namespace sparsehar::kernels {

bool openmp_enabled() {
#ifdef SPARSEHAR_HAVE_OPENMP
  return true;
#else
  return false;
#endif
}

int max_threads() {
#ifdef SPARSEHAR_HAVE_OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

Matrix solve_reweighted_columns_openmp(const Matrix& gram,
                                       const Matrix& diag_weights,
                                       double lambda, const Matrix& rhs) {
  const Index classes = rhs.cols();
  Matrix out(rhs.rows(), classes);
  // Exceptions cannot leave a parallel region; keep one slot per class and
  // rethrow the lowest failing class so the error matches the serial kernel.
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(classes));

#pragma omp parallel for schedule(static) default(none) \
    shared(gram, diag_weights, lambda, rhs, out, errors, classes)
  for (Index c = 0; c < classes; ++c) {
    try {
      Matrix system = gram;
      system.diagonal() += lambda * diag_weights.col(c);
      out.col(c) = solve_spd(system, rhs.col(c), "class " + std::to_string(c));
    } catch (...) {
      errors[static_cast<std::size_t>(c)] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

void score_instances_openmp(const Matrix& t, const Matrix& o, const Matrix& w,
                            const Matrix& u, Matrix& scores,
                            std::vector<Index>& best) {
  const Index n = t.cols();
  Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> rows(
      n, w.cols());
  best.resize(static_cast<std::size_t>(n));

#pragma omp parallel for schedule(static) default(none) \
    shared(t, o, w, u, rows, best, n)
  for (Index i = 0; i < n; ++i) {
    best[static_cast<std::size_t>(i)] =
        score_instance(t.col(i).data(), o.col(i).data(), w, u, rows.row(i).data());
  }
  scores = rows;
}

}  // namespace sparsehar::kernels
