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

#include "oracles.hpp"

#include "sparsehar/error.hpp"
#include "sparsehar/kernels.hpp"

#include <doctest.h>

#include <random>

using namespace sparsehar;

namespace {

Matrix random_spd(Index n, std::mt19937_64& rng) {
  const Matrix a = oracle::random_matrix(n, n + 3, rng);
  return a * a.transpose();
}

}  // namespace

TEST_CASE("solve_reweighted_columns: serial and parallel agree bit for bit") {
  std::mt19937_64 rng(1);
  for (int rep = 0; rep < 20; ++rep) {
    const Index n = oracle::uniform_int(rng, 1, 12);
    const Index c = oracle::uniform_int(rng, 1, 9);
    const Matrix gram = random_spd(n, rng);
    const Matrix diag = oracle::random_matrix(n, c, rng).cwiseAbs();
    const Matrix rhs = oracle::random_matrix(n, c, rng);
    const Matrix a = kernels::solve_reweighted_columns_serial(gram, diag, 0.3, rhs);
    const Matrix b = kernels::solve_reweighted_columns_openmp(gram, diag, 0.3, rhs);
    CHECK(a == b);
    CHECK(solve_reweighted_columns(Execution::parallel, gram, diag, 0.3, rhs) == a);
  }
}

TEST_CASE("solve_reweighted_columns matches an elimination oracle") {
  std::mt19937_64 rng(2);
  const Index n = 6, c = 3;
  const Matrix gram = random_spd(n, rng);
  const Matrix diag = oracle::random_matrix(n, c, rng).cwiseAbs();
  const Matrix rhs = oracle::random_matrix(n, c, rng);
  const Matrix x = kernels::solve_reweighted_columns_serial(gram, diag, 0.5, rhs);
  for (Index k = 0; k < c; ++k) {
    oracle::Grid a = oracle::to_grid(gram);
    for (Index i = 0; i < n; ++i)
      a[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] += 0.5 * diag(i, k);
    std::vector<double> b(rhs.col(k).data(), rhs.col(k).data() + n);
    const auto z = oracle::dense_solve(a, b);
    for (Index i = 0; i < n; ++i)
      CHECK(x(i, k) == doctest::Approx(z[static_cast<std::size_t>(i)]).epsilon(1e-9));
  }
}

TEST_CASE("solve_reweighted_columns reports the lowest singular class") {
  // Rank-one gram; class 1 and 2 get no regularization on the null direction.
  Matrix gram(2, 2);
  gram << 1, 1, 1, 1;
  Matrix diag(2, 3);
  diag << 1, 0, 0,
          1, 0, 0;
  const Matrix rhs = Matrix::Ones(2, 3);
  for (auto exec : {Execution::serial, Execution::parallel}) {
    try {
      solve_reweighted_columns(exec, gram, diag, 1.0, rhs);
      FAIL("expected SingularityError");
    } catch (const SingularityError& e) {
      CHECK(std::string(e.what()).find("class 1") != std::string::npos);
    }
  }
}

TEST_CASE("score_instances: serial and parallel agree bit for bit") {
  std::mt19937_64 rng(3);
  for (int rep = 0; rep < 10; ++rep) {
    const Index dt = oracle::uniform_int(rng, 1, 20);
    const Index dobj = oracle::uniform_int(rng, 1, 30);
    const Index c = oracle::uniform_int(rng, 2, 7);
    const Index n = oracle::uniform_int(rng, 1, 500);
    const Matrix t = oracle::random_matrix(dt, n, rng);
    const Matrix o = oracle::random_matrix(dobj, n, rng);
    const Matrix w = oracle::random_matrix(dt, c, rng);
    const Matrix u = oracle::random_matrix(dobj, c, rng);
    Matrix s1, s2;
    std::vector<Index> b1, b2;
    kernels::score_instances_serial(t, o, w, u, s1, b1);
    kernels::score_instances_openmp(t, o, w, u, s2, b2);
    CHECK(s1 == s2);
    CHECK(b1 == b2);
    for (Index i = 0; i < n; i += 37) {
      const auto [label, scores] = oracle::argmax_scores(t.col(i), o.col(i), w, u);
      CHECK(b1[static_cast<std::size_t>(i)] == label);
      CHECK(s1(i, 0) == doctest::Approx(scores[0]).epsilon(1e-12));
    }
  }
}

TEST_CASE("score_instance resolves ties to the lowest index") {
  const Vector t = Vector::Ones(2);
  const Vector o = Vector::Zero(1);
  Matrix w(2, 4);
  w << 0, 1, 2, 2,
       0, 1, 0, 0;
  Matrix u = Matrix::Zero(1, 4);
  std::vector<double> scores(4);
  // class 1: 2, class 2: 2, class 3: 2
  CHECK(kernels::score_instance(t.data(), o.data(), w, u, scores.data()) == 1);
}
