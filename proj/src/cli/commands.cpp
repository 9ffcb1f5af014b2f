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

#include "sparsehar/cli.hpp"

#include "sparsehar/analysis.hpp"
#include "sparsehar/bench.hpp"
#include "sparsehar/error.hpp"
#include "sparsehar/io.hpp"
#include "sparsehar/predict.hpp"
#include "sparsehar/solver.hpp"
#include "sparsehar/synth.hpp"
#include "sparsehar/transform.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <array>
#include <cstdio>
#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

namespace sparsehar::cli {
namespace {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

// Which norm terms stay active during training.
enum class Ablation { full, skeletal_only, attribute_only };

struct CliConfig {
  std::string data;
  std::string model;
  std::string out;
  std::string report;
  double lambda1 = 0.1;
  double lambda2 = 0.1;
  double tol = 1e-6;
  int max_iters = 100;
  double epsilon = 1e-8;
  std::uint64_t seed = 42;
  bool standardize = false;
  std::optional<double> train_fraction;
  Ablation ablation = Ablation::full;
  double min_duration = 2.0;
  int fit_repetitions = 0;
  bool overwrite = false;
  bool serial = false;

  // analyze
  std::string metric = "block_norm";
  std::vector<Index> select_joints;
  std::vector<Index> select_classes;

  // synth
  Index joints = 15;
  std::vector<Index> joint_dims;
  Index joint_dim = 3;
  Index objects = 1;
  std::vector<Index> modality_dims{3};
  Index classes = 3;
  Index instances = 300;
  double noise = 0.1;
  std::vector<std::string> planted_joints;
  std::vector<std::string> planted_blocks;
};

// A usage problem detected after CLI11 parsing; maps to exit code 1.
class UsageError : public Error {
 public:
  using Error::Error;
};

const std::map<std::string, Ablation>& ablation_names() {
  static const std::map<std::string, Ablation> names{
      {"full", Ablation::full},
      {"skeletal-only", Ablation::skeletal_only},
      {"attribute-only", Ablation::attribute_only}};
  return names;
}

const char* ablation_label(Ablation a) {
  switch (a) {
    case Ablation::full: return "full";
    case Ablation::skeletal_only: return "skeletal-only";
    case Ablation::attribute_only: return "attribute-only";
  }
  return "full";
}

SolverConfig solver_config(const CliConfig& cfg, Ablation ablation) {
  if (!(cfg.lambda1 >= 0.0)) throw UsageError("--lambda1 must be >= 0");
  if (!(cfg.lambda2 >= 0.0)) throw UsageError("--lambda2 must be >= 0");
  if (!(cfg.tol > 0.0)) throw UsageError("--tol must be > 0");
  if (cfg.max_iters < 1) throw UsageError("--max-iters must be >= 1");
  if (!(cfg.epsilon > 0.0)) throw UsageError("--epsilon must be > 0");
  SolverConfig s;
  s.lambda1 = cfg.lambda1;
  s.lambda2 = cfg.lambda2;
  s.tol = cfg.tol;
  s.max_iters = cfg.max_iters;
  s.epsilon = cfg.epsilon;
  s.seed = cfg.seed;
  // Dropping a norm keeps both weight matrices and both feature sets.
  if (ablation == Ablation::skeletal_only) s.lambda2 = 0.0;
  if (ablation == Ablation::attribute_only) s.lambda1 = 0.0;
  return s;
}

void require_input(const std::string& path, const char* flag) {
  if (path.empty()) throw UsageError(std::string(flag) + " is required");
  if (!fs::is_regular_file(path)) {
    throw UsageError(std::string(flag) + ": cannot read '" + path + "'");
  }
}

void require_output(const std::string& path, const char* flag, bool overwrite) {
  if (path.empty()) throw UsageError(std::string(flag) + " is required");
  const fs::path p(path);
  const fs::path dir = p.has_parent_path() ? p.parent_path() : fs::path(".");
  if (!fs::is_directory(dir)) {
    throw UsageError(std::string(flag) + ": directory '" + dir.string() +
                     "' does not exist");
  }
  if (!overwrite && fs::exists(p)) {
    throw UsageError(std::string(flag) + ": '" + path +
                     "' exists (pass --overwrite to replace it)");
  }
}

void require_fraction(const std::optional<double>& f) {
  if (f && !(*f > 0.0 && *f < 1.0)) {
    throw UsageError("--train-fraction must lie strictly between 0 and 1");
  }
}

Execution execution(const CliConfig& cfg) {
  return cfg.serial ? Execution::serial : Execution::parallel;
}

struct Trained {
  Model model;
  FitReport report;
};

Trained train_model(const Dataset& train, const SolverConfig& config,
                    bool standardize_features, Execution exec) {
  if (!standardize_features) {
    auto r = fit(train, config, exec);
    return {std::move(r.model), std::move(r.report)};
  }
  auto st = standardize(train);
  auto r = fit(st.data, config, exec);
  return {r.model.with_transform(std::move(st.transform)), std::move(r.report)};
}

ordered_json predictions_json(const Model& model, const BatchPrediction& p,
                              const std::optional<std::vector<Index>>& truth) {
  ordered_json j;
  j["schema_version"] = 1;
  auto rows = ordered_json::array();
  for (std::size_t i = 0; i < p.labels.size(); ++i) {
    ordered_json row;
    row["index"] = i;
    row["label_index"] = p.labels[i];
    row["label"] = model.class_names()[static_cast<std::size_t>(p.labels[i])];
    std::vector<double> scores(static_cast<std::size_t>(p.scores.cols()));
    for (Index c = 0; c < p.scores.cols(); ++c) {
      scores[static_cast<std::size_t>(c)] = p.scores(static_cast<Index>(i), c);
    }
    row["scores"] = scores;
    if (truth) row["true_label_index"] = (*truth)[i];
    rows.push_back(std::move(row));
  }
  j["predictions"] = std::move(rows);
  if (truth) j["accuracy"] = p.accuracy;
  return j;
}

// Loads an input file and checks it is compatible with the model.
DatasetFile load_for_model(const std::string& path, const Model& model) {
  auto file = read_dataset_file(path);
  if (!(file.layout == model.layout())) {
    throw LayoutError("dataset layout does not match the model layout");
  }
  if (file.class_names != model.class_names()) {
    throw LayoutError("dataset classes do not match the model classes");
  }
  return file;
}

BatchPrediction score_file(const Model& model, const DatasetFile& file,
                           Execution exec) {
  auto p = predict_observations(model, file.skeleton, file.objects, exec);
  if (file.labels) p.accuracy = accuracy(p.labels, *file.labels);
  return p;
}

// ---- subcommands ----------------------------------------------------------

int cmd_train(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  require_fraction(cfg.train_fraction);
  const auto config = solver_config(cfg, cfg.ablation);
  require_input(cfg.data, "--data");
  require_output(cfg.out, "--out", cfg.overwrite);
  const std::string report_path =
      cfg.report.empty() ? cfg.out + ".report.json" : cfg.report;
  require_output(report_path, "--report", cfg.overwrite);

  const Dataset data = load_dataset(cfg.data);
  std::optional<Split> parts;
  if (cfg.train_fraction) parts = split(data, *cfg.train_fraction, cfg.seed);
  const Dataset& train = parts ? parts->train : data;

  auto trained = train_model(train, config, cfg.standardize, execution(cfg));
  const auto train_pred = predict_batch(trained.model, train, execution(cfg));

  ordered_json report = fit_report_to_json(trained.report);
  report["ablation"] = ablation_label(cfg.ablation);
  report["train_accuracy"] = train_pred.accuracy;
  std::optional<double> test_acc;
  if (parts) {
    test_acc = predict_batch(trained.model, parts->test, execution(cfg)).accuracy;
    report["test_accuracy"] = *test_acc;
  }

  save_model(trained.model, cfg.out, cfg.overwrite);
  write_file_atomic(report_path, report.dump(2) + "\n", cfg.overwrite);

  if (!trained.report.converged) {
    err << "warning: solver did not converge within " << config.max_iters
        << " iterations\n";
  }
  out << "iterations: " << trained.report.iterations_run
      << "\nconverged: " << (trained.report.converged ? "yes" : "no")
      << "\nfinal objective: " << trained.report.objective_trace.back()
      << "\ntrain accuracy: " << train_pred.accuracy << '\n';
  if (test_acc) out << "test accuracy: " << *test_acc << '\n';
  out << "model written to " << cfg.out << '\n';
  return kExitOk;
}

int cmd_predict(const CliConfig& cfg, std::ostream& out, std::ostream&) {
  require_input(cfg.model, "--model");
  require_input(cfg.data, "--data");
  if (!cfg.out.empty()) require_output(cfg.out, "--out", cfg.overwrite);
  const Model model = load_model(cfg.model);
  const auto file = load_for_model(cfg.data, model);
  const auto p = score_file(model, file, execution(cfg));
  const auto j = predictions_json(model, p, file.labels);
  if (cfg.out.empty()) {
    out << j.dump(2) << '\n';
  } else {
    write_file_atomic(cfg.out, j.dump(2) + "\n", cfg.overwrite);
    if (file.labels) out << "accuracy: " << p.accuracy << '\n';
    out << p.labels.size() << " predictions written to " << cfg.out << '\n';
  }
  return kExitOk;
}

int cmd_evaluate(const CliConfig& cfg, std::ostream& out, std::ostream&) {
  require_input(cfg.model, "--model");
  require_input(cfg.data, "--data");
  if (!cfg.out.empty()) require_output(cfg.out, "--out", cfg.overwrite);
  const Model model = load_model(cfg.model);
  const auto file = load_for_model(cfg.data, model);
  if (!file.labels) throw InputError("evaluate needs a labeled dataset");
  const auto p = score_file(model, file, execution(cfg));

  const Index c = model.class_count();
  Matrix confusion = Matrix::Zero(c, c);  // rows: truth, columns: predicted
  for (std::size_t i = 0; i < p.labels.size(); ++i) {
    confusion((*file.labels)[i], p.labels[i]) += 1.0;
  }
  ordered_json j;
  j["schema_version"] = 1;
  j["accuracy"] = p.accuracy;
  j["classes"] = model.class_names();
  auto rows = ordered_json::array();
  for (Index r = 0; r < c; ++r) {
    std::vector<long long> row;
    for (Index k = 0; k < c; ++k) row.push_back(static_cast<long long>(confusion(r, k)));
    rows.push_back(row);
  }
  j["confusion"] = rows;
  if (!cfg.out.empty()) write_file_atomic(cfg.out, j.dump(2) + "\n", cfg.overwrite);

  out << "accuracy: " << p.accuracy << "\nconfusion (rows = truth):\n";
  char buf[32];
  for (Index r = 0; r < c; ++r) {
    std::snprintf(buf, sizeof buf, "%-14.14s",
                  model.class_names()[static_cast<std::size_t>(r)].c_str());
    out << buf;
    for (Index k = 0; k < c; ++k) {
      std::snprintf(buf, sizeof buf, " %8lld", static_cast<long long>(confusion(r, k)));
      out << buf;
    }
    out << '\n';
  }
  return kExitOk;
}

int cmd_analyze(const CliConfig& cfg, std::ostream& out, std::ostream&) {
  require_input(cfg.model, "--model");
  if (!cfg.out.empty()) require_output(cfg.out, "--out", cfg.overwrite);
  ImportanceMetric metric;
  if (cfg.metric == "block_norm") {
    metric = ImportanceMetric::block_norm;
  } else if (cfg.metric == "signed_sum") {
    metric = ImportanceMetric::signed_sum;
  } else {
    throw UsageError("--metric must be block_norm or signed_sum");
  }
  const Model model = load_model(cfg.model);
  const ReportSelection selection{cfg.select_joints, cfg.select_classes};
  selection.validate(model);
  const auto report = importance_report(model, metric);
  if (!cfg.out.empty()) {
    write_file_atomic(cfg.out, report_to_json(report, model, selection).dump(2) + "\n",
                      cfg.overwrite);
  }
  out << report_to_table(report, model, selection);
  return kExitOk;
}

std::vector<Index> parse_indices(const std::string& text, const char* flag) {
  std::vector<Index> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ':')) {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(part, &used);
      if (used != part.size()) throw std::invalid_argument(part);
      out.push_back(static_cast<Index>(v));
    } catch (const std::exception&) {
      throw UsageError(std::string(flag) + ": cannot parse '" + text + "'");
    }
  }
  return out;
}

int cmd_synth(const CliConfig& cfg, std::ostream& out, std::ostream&) {
  require_output(cfg.out, "--out", cfg.overwrite);
  std::vector<Index> joint_dims = cfg.joint_dims;
  if (joint_dims.empty()) {
    if (cfg.joints < 1) throw UsageError("--joints must be >= 1");
    joint_dims.assign(static_cast<std::size_t>(cfg.joints), cfg.joint_dim);
  }
  FeatureLayout layout(joint_dims, cfg.objects, cfg.modality_dims);
  if (cfg.classes < 2) throw UsageError("--classes must be >= 2");

  const auto nc = static_cast<std::size_t>(cfg.classes);
  SynthSpec spec{layout, cfg.classes, cfg.instances, cfg.noise,
                 std::vector<std::vector<Index>>(nc),
                 std::vector<std::vector<std::pair<Index, Index>>>(nc), cfg.seed};
  auto classes_for = [&](Index c, const char* flag) {
    if (c < 0 || c >= cfg.classes) {
      throw UsageError(std::string(flag) + ": class " + std::to_string(c) +
                       " out of range");
    }
    return std::vector<std::size_t>{static_cast<std::size_t>(c)};
  };
  auto every_class = [&] {
    std::vector<std::size_t> all(nc);
    for (std::size_t k = 0; k < nc; ++k) all[k] = k;
    return all;
  };
  for (const auto& text : cfg.planted_joints) {
    const auto v = parse_indices(text, "--planted-joint");
    if (v.size() != 1 && v.size() != 2) {
      throw UsageError("--planted-joint expects JOINT or CLASS:JOINT");
    }
    const auto targets =
        v.size() == 2 ? classes_for(v[0], "--planted-joint") : every_class();
    for (auto c : targets) spec.planted_joints[c].push_back(v.back());
  }
  for (const auto& text : cfg.planted_blocks) {
    const auto v = parse_indices(text, "--planted-block");
    if (v.size() != 2 && v.size() != 3) {
      throw UsageError("--planted-block expects OBJECT:MODALITY or CLASS:OBJECT:MODALITY");
    }
    const auto targets =
        v.size() == 3 ? classes_for(v[0], "--planted-block") : every_class();
    for (auto c : targets) {
      spec.planted_blocks[c].emplace_back(v[v.size() - 2], v[v.size() - 1]);
    }
  }
  if (cfg.planted_joints.empty() && cfg.planted_blocks.empty()) {
    for (std::size_t c = 0; c < nc; ++c) {
      spec.planted_joints[c] = {0};
      spec.planted_blocks[c] = {{0, 0}};
    }
  }
  const auto result = generate(spec);
  save_dataset(result.data, cfg.out, cfg.overwrite);
  out << "wrote " << result.data.size() << " instances (d_T = "
      << layout.skeleton_dim() << ", d_O = " << layout.object_dim()
      << ", C = " << cfg.classes << ") to " << cfg.out << '\n';
  return kExitOk;
}

int cmd_bench(const CliConfig& cfg, std::ostream& out, std::ostream&) {
  require_input(cfg.model, "--model");
  require_input(cfg.data, "--data");
  if (!cfg.out.empty()) require_output(cfg.out, "--out", cfg.overwrite);
  if (!(cfg.min_duration > 0.0)) throw UsageError("--min-duration must be > 0");
  if (cfg.fit_repetitions < 0) throw UsageError("--fit-repetitions must be >= 0");
  const Model model = load_model(cfg.model);
  const auto file = load_for_model(cfg.data, model);
  if (!file.labels) throw InputError("bench needs a labeled dataset");
  const Dataset data = file.to_dataset();

  BenchResult r = bench_predict(model, data, cfg.min_duration);
  if (cfg.fit_repetitions > 0) {
    const Dataset fit_data =
        model.transform() ? model.transform()->apply(data) : data;
    const auto f = bench_fit(fit_data, model.hyperparams(), cfg.fit_repetitions);
    r.fit_seconds = f.fit_seconds;
    r.fit_iterations = f.fit_iterations;
  }
  if (!cfg.out.empty()) {
    write_file_atomic(cfg.out, bench_to_json(r).dump(2) + "\n", cfg.overwrite);
  }
  out << bench_to_table(r);
  return kExitOk;
}

int cmd_ablate(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  const double fraction = cfg.train_fraction.value_or(0.7);
  require_fraction(fraction);
  require_input(cfg.data, "--data");
  if (cfg.out.empty()) throw UsageError("--out (output prefix) is required");
  const std::array<Ablation, 3> modes{Ablation::full, Ablation::skeletal_only,
                                      Ablation::attribute_only};
  std::vector<std::string> paths;
  for (auto mode : modes) {
    paths.push_back(cfg.out + "." + ablation_label(mode) + ".json");
    require_output(paths.back(), "--out", cfg.overwrite);
    solver_config(cfg, mode);
  }
  const std::string summary_path = cfg.out + ".ablation.json";
  require_output(summary_path, "--out", cfg.overwrite);

  const Dataset data = load_dataset(cfg.data);
  const Split parts = split(data, fraction, cfg.seed);

  ordered_json summary;
  summary["schema_version"] = 1;
  summary["train_fraction"] = fraction;
  summary["seed"] = cfg.seed;
  summary["test_indices"] = parts.test_indices;
  auto runs = ordered_json::array();
  char buf[96];
  std::snprintf(buf, sizeof buf, "%-16s %10s %10s %11s %10s\n", "variant",
                "lambda1", "lambda2", "iterations", "test acc");
  std::string table = buf;
  std::vector<Model> models;
  for (std::size_t k = 0; k < modes.size(); ++k) {
    const auto config = solver_config(cfg, modes[k]);
    auto trained = train_model(parts.train, config, cfg.standardize, execution(cfg));
    const double acc =
        predict_batch(trained.model, parts.test, execution(cfg)).accuracy;
    if (!trained.report.converged) {
      err << "warning: " << ablation_label(modes[k])
          << " fit did not converge within " << config.max_iters << " iterations\n";
    }
    ordered_json run;
    run["variant"] = ablation_label(modes[k]);
    run["lambda1"] = config.lambda1;
    run["lambda2"] = config.lambda2;
    run["iterations_run"] = trained.report.iterations_run;
    run["converged"] = trained.report.converged;
    run["test_accuracy"] = acc;
    run["model"] = paths[k];
    runs.push_back(run);
    std::snprintf(buf, sizeof buf, "%-16s %10.4g %10.4g %11d %10.4f\n",
                  ablation_label(modes[k]), config.lambda1, config.lambda2,
                  trained.report.iterations_run, acc);
    table += buf;
    models.push_back(std::move(trained.model));
  }
  summary["runs"] = runs;
  for (std::size_t k = 0; k < models.size(); ++k) {
    save_model(models[k], paths[k], cfg.overwrite);
  }
  write_file_atomic(summary_path, summary.dump(2) + "\n", cfg.overwrite);
  out << table;
  return kExitOk;
}

// ---- option wiring ----------------------------------------------------------

void add_solver_flags(CLI::App* cmd, CliConfig& cfg) {
  cmd->add_option("--lambda1", cfg.lambda1, "Skeletal norm weight")
      ->capture_default_str();
  cmd->add_option("--lambda2", cfg.lambda2, "Attribute norm weight")
      ->capture_default_str();
  cmd->add_option("--tol", cfg.tol, "Relative objective decrease threshold")
      ->capture_default_str();
  cmd->add_option("--max-iters", cfg.max_iters, "Iteration cap")->capture_default_str();
  cmd->add_option("--epsilon", cfg.epsilon, "Block norm floor in the reweighting")
      ->capture_default_str();
  cmd->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
  cmd->add_flag("--standardize", cfg.standardize,
                "Standardize features (statistics from the training data)");
  cmd->add_flag("--serial", cfg.serial, "Use the serial kernels");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CliConfig cfg;
  CLI::App app{"Joint skeleton/object activity recognition with structured sparsity",
               "sparsehar"};
  app.require_subcommand(1);

  auto* train = app.add_subcommand("train", "Fit a model on a dataset file");
  train->add_option("--data", cfg.data, "Dataset file")->required();
  train->add_option("--out", cfg.out, "Model file to write")->required();
  train->add_option("--report", cfg.report,
                    "Fit report path (default: <out>.report.json)");
  train->add_option("--train-fraction", cfg.train_fraction,
                    "Hold out 1 - fraction of the data and report its accuracy");
  train->add_option("--ablation", cfg.ablation, "full | skeletal-only | attribute-only")
      ->transform(CLI::CheckedTransformer(ablation_names(), CLI::ignore_case));
  add_solver_flags(train, cfg);
  train->add_flag("--overwrite", cfg.overwrite, "Replace existing outputs");

  auto* predict_cmd = app.add_subcommand("predict", "Classify every instance of a file");
  predict_cmd->add_option("--model", cfg.model, "Model file")->required();
  predict_cmd->add_option("--data", cfg.data, "Dataset file (labels optional)")->required();
  predict_cmd->add_option("--out", cfg.out, "Predictions JSON (default: stdout)");
  predict_cmd->add_flag("--overwrite", cfg.overwrite, "Replace existing outputs");
  predict_cmd->add_flag("--serial", cfg.serial, "Use the serial kernels");

  auto* evaluate = app.add_subcommand("evaluate", "Accuracy and confusion matrix");
  evaluate->add_option("--model", cfg.model, "Model file")->required();
  evaluate->add_option("--data", cfg.data, "Labeled dataset file")->required();
  evaluate->add_option("--out", cfg.out, "Evaluation JSON");
  evaluate->add_flag("--overwrite", cfg.overwrite, "Replace existing outputs");
  evaluate->add_flag("--serial", cfg.serial, "Use the serial kernels");

  auto* analyze = app.add_subcommand("analyze", "Joint and attribute importance report");
  analyze->add_option("--model", cfg.model, "Model file")->required();
  analyze->add_option("--out", cfg.out, "Report JSON");
  analyze->add_option("--metric", cfg.metric, "block_norm | signed_sum")
      ->capture_default_str();
  analyze->add_option("--joint", cfg.select_joints, "Restrict to these joints");
  analyze->add_option("--class", cfg.select_classes, "Restrict to these classes");
  analyze->add_flag("--overwrite", cfg.overwrite, "Replace existing outputs");

  auto* synth = app.add_subcommand("synth", "Write a synthetic dataset with planted support");
  synth->add_option("--out", cfg.out, "Dataset file to write")->required();
  synth->add_option("--joints", cfg.joints, "Number of joints")->capture_default_str();
  synth->add_option("--joint-dim", cfg.joint_dim, "Dimension of every joint")
      ->capture_default_str();
  synth->add_option("--joint-dims", cfg.joint_dims, "Per-joint dimensions");
  synth->add_option("--objects", cfg.objects, "Objects per instance")->capture_default_str();
  synth->add_option("--modality-dims", cfg.modality_dims, "Per-modality dimensions");
  synth->add_option("--classes", cfg.classes, "Number of classes")->capture_default_str();
  synth->add_option("--instances", cfg.instances, "Number of instances")
      ->capture_default_str();
  synth->add_option("--noise", cfg.noise, "Feature noise sigma")->capture_default_str();
  synth->add_option("--planted-joint", cfg.planted_joints,
                    "JOINT (all classes) or CLASS:JOINT; repeatable");
  synth->add_option("--planted-block", cfg.planted_blocks,
                    "OBJECT:MODALITY (all classes) or CLASS:OBJECT:MODALITY; repeatable");
  synth->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
  synth->add_flag("--overwrite", cfg.overwrite, "Replace existing outputs");

  auto* bench = app.add_subcommand("bench", "Measure prediction throughput");
  bench->add_option("--model", cfg.model, "Model file")->required();
  bench->add_option("--data", cfg.data, "Labeled dataset file")->required();
  bench->add_option("--out", cfg.out, "Benchmark JSON");
  bench->add_option("--min-duration", cfg.min_duration, "Seconds of timed prediction")
      ->capture_default_str();
  bench->add_option("--fit-repetitions", cfg.fit_repetitions,
                    "Also time this many fits with the model's hyperparameters");
  bench->add_flag("--overwrite", cfg.overwrite, "Replace existing outputs");

  auto* ablate = app.add_subcommand("ablate", "Compare full, skeletal-only and attribute-only");
  ablate->add_option("--data", cfg.data, "Labeled dataset file")->required();
  ablate->add_option("--out", cfg.out, "Output prefix for models and summary")->required();
  ablate->add_option("--train-fraction", cfg.train_fraction, "Training share (default 0.7)");
  add_solver_flags(ablate, cfg);
  ablate->add_flag("--overwrite", cfg.overwrite, "Replace existing outputs");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }

  try {
    if (*train) return cmd_train(cfg, out, err);
    if (*predict_cmd) return cmd_predict(cfg, out, err);
    if (*evaluate) return cmd_evaluate(cfg, out, err);
    if (*analyze) return cmd_analyze(cfg, out, err);
    if (*synth) return cmd_synth(cfg, out, err);
    if (*bench) return cmd_bench(cfg, out, err);
    if (*ablate) return cmd_ablate(cfg, out, err);
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace sparsehar::cli
