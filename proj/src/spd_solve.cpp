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

#include "sparsehar/spd_solve.hpp"

#include "sparsehar/error.hpp"

#include <Eigen/Cholesky>

#include <limits>

namespace sparsehar {

Vector solve_spd(const Matrix& a, const Vector& b, const std::string& context) {
  const Index n = a.rows();
  Eigen::LLT<Matrix> llt(a);
  bool singular = llt.info() != Eigen::Success;
  if (!singular && n > 0) {
    const double max_diag = a.diagonal().maxCoeff();
    const auto diag = llt.matrixLLT().diagonal();
    const double min_pivot = diag.cwiseAbs2().minCoeff();
    singular = !(min_pivot > static_cast<double>(n) *
                                 std::numeric_limits<double>::epsilon() *
                                 max_diag);
  }
  if (singular) {
    throw SingularityError(context +
                           ": system matrix is not positive definite "
                           "(zero regularization with a rank-deficient design)");
  }
  return llt.solve(b);
}

}  // namespace sparsehar
