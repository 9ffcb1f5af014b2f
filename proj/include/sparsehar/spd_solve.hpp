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

#include <string>

namespace sparsehar {

// Solves A x = b for symmetric positive definite A by Cholesky
// factorization. Throws SingularityError if A is not numerically positive
// definite (a pivot is non-positive or below dim * eps * max diag(A)).
// `context` is prepended to the error message.
Vector solve_spd(const Matrix& a, const Vector& b, const std::string& context);

}  // namespace sparsehar
