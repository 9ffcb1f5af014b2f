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

#include "sparsehar/bench.hpp"

#include "sparsehar/error.hpp"
#include "sparsehar/predict.hpp"
#include "sparsehar/solver.hpp"

#include <chrono>
#include <cstdio>

namespace sparsehar {
namespace {

using Clock = std::chrono::steady_clock;

BenchDims dims_of(const Dataset& data) {
  return {data.layout().skeleton_dim(), data.layout().object_dim(),
          data.class_count(), data.size()};
}

// Folds each prediction into a value the optimizer cannot discard.
struct Sink {
  double acc = 0.0;
  void consume(const Prediction& p) {
    acc += static_cast<double>(p.label) + p.scores[0];
  }
};

}  // namespace

BenchResult bench_predict(const Model& model, const Dataset& data,
                          double min_duration_seconds) {
  if (!(data.layout() == model.layout())) {
    throw LayoutError("benchmark dataset does not match the model layout");
  }
  const Index n = data.size();
  Sink sink;
  auto one_pass = [&] {
    for (Index i = 0; i < n; ++i) {
      sink.consume(predict(model, data.skeleton().col(i), data.objects().col(i)));
    }
  };

  one_pass();  // warm-up

  BenchResult r;
  r.dims = dims_of(data);
  const auto start = Clock::now();
  double elapsed = 0.0;
  do {
    one_pass();
    ++r.repetitions;
    r.frames += n;
    elapsed = std::chrono::duration<double>(Clock::now() - start).count();
  } while (elapsed < min_duration_seconds);

  volatile double keep = sink.acc;
  (void)keep;
  r.seconds_per_frame = elapsed / static_cast<double>(r.frames);
  r.predictions_per_second = static_cast<double>(r.frames) / elapsed;
  return r;
}

BenchResult bench_fit(const Dataset& data, const SolverConfig& config,
                      int repetitions) {
  if (repetitions < 1) throw ConfigError("repetitions must be >= 1");
  BenchResult r;
  r.dims = dims_of(data);
  double total = 0.0;
  for (int k = 0; k < repetitions; ++k) {
    const auto start = Clock::now();
    auto result = fit(data, config);
    total += std::chrono::duration<double>(Clock::now() - start).count();
    r.fit_iterations.push_back(result.report.iterations_run);
  }
  r.repetitions = repetitions;
  r.fit_seconds = total / repetitions;
  return r;
}

nlohmann::ordered_json bench_to_json(const BenchResult& r) {
  nlohmann::ordered_json j;
  j["schema_version"] = 1;
  j["predictions_per_second"] = r.predictions_per_second;
  j["seconds_per_frame"] = r.seconds_per_frame;
  j["fit_seconds"] = r.fit_seconds;
  j["dims"] = {{"skeleton_dim", r.dims.skeleton_dim},
               {"object_dim", r.dims.object_dim},
               {"classes", r.dims.classes},
               {"instances", r.dims.instances}};
  j["repetitions"] = r.repetitions;
  j["frames"] = r.frames;
  j["fit_iterations"] = r.fit_iterations;
  return j;
}

std::string bench_to_table(const BenchResult& r) {
  char buf[128];
  std::string out;
  std::snprintf(buf, sizeof buf, "%-24s %14s\n", "Metric", "Value");
  out += buf;
  if (r.frames > 0) {
    std::snprintf(buf, sizeof buf, "%-24s %14.2e\n", "Processing Speed (Hz)",
                  r.predictions_per_second);
    out += buf;
    std::snprintf(buf, sizeof buf, "%-24s %14.2e\n", "Time Per Frame (sec)",
                  r.seconds_per_frame);
    out += buf;
  }
  if (r.fit_seconds > 0.0) {
    std::snprintf(buf, sizeof buf, "%-24s %14.2e\n", "Fit Time (sec)",
                  r.fit_seconds);
    out += buf;
  }
  return out;
}

}  // namespace sparsehar
