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
#include "sparsehar/model.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace sparsehar {

struct BenchDims {
  Index skeleton_dim = 0;
  Index object_dim = 0;
  Index classes = 0;
  Index instances = 0;
};

// Prediction fields are zero when only fitting was measured, and
// fit_seconds is zero when only prediction was measured.
struct BenchResult {
  double predictions_per_second = 0.0;
  double seconds_per_frame = 0.0;
  double fit_seconds = 0.0;
  BenchDims dims;
  // Timed passes over the dataset (predict) or timed fits (fit).
  int repetitions = 0;
  long long frames = 0;
  std::vector<int> fit_iterations;  // one entry per timed fit
};

// Runs predict() over every instance, pass after pass, until at least
// min_duration_seconds of wall time has accumulated. One untimed warm-up
// pass comes first. Single-threaded.
BenchResult bench_predict(const Model& model, const Dataset& data,
                          double min_duration_seconds = 2.0);

// Times `repetitions` independent fits and reports the mean wall time.
BenchResult bench_fit(const Dataset& data, const SolverConfig& config,
                      int repetitions);

nlohmann::ordered_json bench_to_json(const BenchResult& result);

// Two-row table: "Processing Speed (Hz)" and "Time Per Frame (sec)", plus
// the mean fit time when measured.
std::string bench_to_table(const BenchResult& result);

}  // namespace sparsehar
