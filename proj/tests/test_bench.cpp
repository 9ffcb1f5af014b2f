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

#include "sparsehar/bench.hpp"

#include <doctest.h>

#include <random>

using namespace sparsehar;

namespace {

Model random_model(const FeatureLayout& layout, Index classes, std::mt19937_64& rng) {
  std::vector<std::string> names;
  for (Index c = 0; c < classes; ++c) names.push_back("c" + std::to_string(c));
  return Model(layout, oracle::random_matrix(layout.skeleton_dim(), classes, rng),
               oracle::random_matrix(layout.object_dim(), classes, rng), names, {});
}

}  // namespace

TEST_CASE("trivial model timing fields are self-consistent") {
  std::mt19937_64 rng(1);
  FeatureLayout layout({1}, 1, {1});
  const auto data = oracle::random_dataset(layout, 50, 2, rng);
  const Model model = random_model(layout, 2, rng);
  const Model before = model;
  const auto r = bench_predict(model, data, 0.05);
  CHECK(r.predictions_per_second > 0.0);
  CHECK(r.seconds_per_frame > 0.0);
  CHECK(r.predictions_per_second * r.seconds_per_frame == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(r.frames == static_cast<long long>(r.repetitions) * 50);
  CHECK(r.dims.instances == 50);
  CHECK(r.fit_seconds == 0.0);
  CHECK(model == before);

  const auto j = bench_to_json(r);
  CHECK(j["predictions_per_second"].get<double>() == r.predictions_per_second);
  const auto table = bench_to_table(r);
  CHECK(table.find("Processing Speed (Hz)") != std::string::npos);
  CHECK(table.find("Time Per Frame (sec)") != std::string::npos);
}

TEST_CASE("doubling the class count scales per-frame time within [1, 4]") {
  std::mt19937_64 rng(2);
  FeatureLayout layout(std::vector<Index>(15, 3), 9, std::vector<Index>(3, 11));
  const auto data = oracle::random_dataset(layout, 400, 12, rng);
  const auto half = bench_predict(random_model(layout, 6, rng), data, 0.3);
  const auto full = bench_predict(random_model(layout, 12, rng), data, 0.3);
  const double ratio = full.seconds_per_frame / half.seconds_per_frame;
  MESSAGE("C 6 -> 12 per-frame ratio ", ratio);
  CHECK(ratio >= 1.0);
  CHECK(ratio <= 4.0);
}

TEST_CASE("bench_fit") {
  std::mt19937_64 rng(3);
  FeatureLayout layout({3, 3, 3}, 2, {2, 2});
  const auto data = oracle::random_dataset(layout, 300, 3, rng);
  const auto copy = data;
  SolverConfig cfg;
  const auto r = bench_fit(data, cfg, 3);
  CHECK(r.repetitions == 3);
  REQUIRE(r.fit_iterations.size() == 3);
  CHECK(r.fit_iterations[0] == r.fit_iterations[1]);
  CHECK(r.fit_iterations[1] == r.fit_iterations[2]);
  CHECK(r.fit_seconds > 0.0);
  CHECK(r.predictions_per_second == 0.0);
  CHECK(data == copy);

  const auto one = bench_fit(data, cfg, 1);
  CHECK(one.fit_iterations.size() == 1);
  CHECK(one.fit_iterations[0] == r.fit_iterations[0]);
}

TEST_CASE("fit time grows superlinearly in the skeleton dimension") {
  std::mt19937_64 rng(4);
  SolverConfig cfg;
  cfg.tol = 1e-300;  // run every iteration so both sizes do equal work
  cfg.max_iters = 10;
  auto time_for = [&](Index joints) {
    FeatureLayout layout(std::vector<Index>(static_cast<std::size_t>(joints), 4), 1, {1});
    const auto data = oracle::random_dataset(layout, 2000, 2, rng);
    return bench_fit(data, cfg, 3).fit_seconds;
  };
  const double small = time_for(40);
  const double large = time_for(80);
  MESSAGE("fit seconds d_T=160: ", small, "  d_T=320: ", large);
  CHECK(large / small > 2.0);
}
