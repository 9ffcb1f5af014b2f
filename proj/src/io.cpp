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

#include "sparsehar/io.hpp"

#include "sparsehar/error.hpp"

#include <cmath>
#include <fstream>
#include <random>
#include <sstream>
#include <unordered_map>

namespace sparsehar {
namespace {

using ordered_json = nlohmann::ordered_json;
using json = nlohmann::json;

std::vector<Index> index_list(const json& j, const char* key, long line) {
  if (!j.contains(key) || !j[key].is_array()) {
    throw ParseError(std::string("header is missing array '") + key + "'", line);
  }
  std::vector<Index> out;
  for (const auto& v : j[key]) {
    if (!v.is_number_integer()) {
      throw ParseError(std::string("'") + key + "' must hold integers", line);
    }
    out.push_back(v.get<Index>());
  }
  return out;
}

std::vector<std::string> string_list(const json& j, const char* key, long line) {
  if (!j.contains(key) || !j[key].is_array()) {
    throw ParseError(std::string("missing string array '") + key + "'", line);
  }
  std::vector<std::string> out;
  for (const auto& v : j[key]) {
    if (!v.is_string()) {
      throw ParseError(std::string("'") + key + "' must hold strings", line);
    }
    out.push_back(v.get<std::string>());
  }
  return out;
}

FeatureLayout layout_from_json(const json& j, long line) {
  if (!j.contains("object_count") || !j["object_count"].is_number_integer()) {
    throw ParseError("header is missing integer 'object_count'", line);
  }
  try {
    return FeatureLayout(index_list(j, "joint_dims", line),
                         j["object_count"].get<Index>(),
                         index_list(j, "modality_dims", line));
  } catch (const LayoutError& e) {
    throw ParseError(e.what(), line);
  }
}

void layout_to_json(const FeatureLayout& layout, ordered_json& j) {
  j["joint_dims"] = layout.joint_dims();
  j["object_count"] = layout.object_count();
  j["modality_dims"] = layout.modality_dims();
}

ordered_json names_to_json(const FeatureNames& names) {
  ordered_json j;
  j["joints"] = names.joints;
  j["objects"] = names.objects;
  j["modalities"] = names.modalities;
  return j;
}

FeatureNames names_from_json(const json& j, const FeatureLayout& layout,
                             long line) {
  if (j.is_null()) return FeatureNames::defaults_for(layout);
  if (!j.is_object()) throw ParseError("'names' must be an object", line);
  FeatureNames names{string_list(j, "joints", line),
                     string_list(j, "objects", line),
                     string_list(j, "modalities", line)};
  try {
    names.validate(layout);
  } catch (const LayoutError& e) {
    throw ParseError(e.what(), line);
  }
  return names;
}

json matrix_to_rows(const Matrix& m) {
  json rows = json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_rows(const json& j, Index rows, Index cols, const char* what) {
  if (!j.is_array() || static_cast<Index>(j.size()) != rows) {
    throw ParseError(std::string(what) + " must have " + std::to_string(rows) +
                         " rows",
                     0);
  }
  Matrix m(rows, cols);
  for (Index r = 0; r < rows; ++r) {
    const auto& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Index>(row.size()) != cols) {
      throw ParseError(std::string(what) + " row " + std::to_string(r) +
                           " must have " + std::to_string(cols) + " entries",
                       0);
    }
    for (Index c = 0; c < cols; ++c) {
      const auto& v = row[static_cast<std::size_t>(c)];
      if (!v.is_number()) {
        throw ParseError(std::string(what) + " holds a non-numeric entry", 0);
      }
      m(r, c) = v.get<double>();
    }
  }
  return m;
}

json vector_to_json(const Vector& v) { return std::vector<double>(v.begin(), v.end()); }

Vector vector_from_json(const json& j, Index n, const char* what) {
  if (!j.is_array() || static_cast<Index>(j.size()) != n) {
    throw ParseError(std::string(what) + " must have " + std::to_string(n) +
                         " entries",
                     0);
  }
  Vector v(n);
  for (Index k = 0; k < n; ++k) {
    const auto& e = j[static_cast<std::size_t>(k)];
    if (!e.is_number()) throw ParseError(std::string(what) + " is not numeric", 0);
    v[k] = e.get<double>();
  }
  return v;
}

ordered_json transform_to_json(const FeatureTransform& t) {
  ordered_json j;
  j["skeleton_mean"] = vector_to_json(t.skeleton_mean);
  j["skeleton_scale"] = vector_to_json(t.skeleton_scale);
  j["object_mean"] = vector_to_json(t.object_mean);
  j["object_scale"] = vector_to_json(t.object_scale);
  j["skeleton_constant"] = t.skeleton_constant;
  j["object_constant"] = t.object_constant;
  return j;
}

FeatureTransform transform_from_json(const json& j, const FeatureLayout& layout) {
  FeatureTransform t;
  t.skeleton_mean = vector_from_json(j.at("skeleton_mean"), layout.skeleton_dim(),
                                     "skeleton_mean");
  t.skeleton_scale = vector_from_json(j.at("skeleton_scale"),
                                      layout.skeleton_dim(), "skeleton_scale");
  t.object_mean =
      vector_from_json(j.at("object_mean"), layout.object_dim(), "object_mean");
  t.object_scale =
      vector_from_json(j.at("object_scale"), layout.object_dim(), "object_scale");
  t.skeleton_constant = j.at("skeleton_constant").get<std::vector<bool>>();
  t.object_constant = j.at("object_constant").get<std::vector<bool>>();
  if (static_cast<Index>(t.skeleton_constant.size()) != layout.skeleton_dim() ||
      static_cast<Index>(t.object_constant.size()) != layout.object_dim()) {
    throw ParseError("transform flags do not match the layout", 0);
  }
  return t;
}

}  // namespace

Dataset DatasetFile::to_dataset() const {
  if (!labels) throw InputError("dataset file has no labels");
  return Dataset::from_label_indices(layout, skeleton, objects, *labels,
                                     class_names, names);
}

DatasetFile DatasetFile::from_dataset(const Dataset& data) {
  return DatasetFile{data.layout(),   data.class_names(), data.feature_names(),
                     data.skeleton(), data.objects(),     data.label_indices()};
}

DatasetFile parse_dataset_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  long line_no = 0;

  // Header.
  json header;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    header = json::parse(line, nullptr, false);
    if (header.is_discarded() || !header.is_object()) {
      throw ParseError("header is not a JSON object", line_no);
    }
    break;
  }
  if (header.is_null()) throw ParseError("file is empty", 0);
  const long header_line = line_no;
  FeatureLayout layout = layout_from_json(header, header_line);
  auto classes = string_list(header, "classes", header_line);
  std::unordered_map<std::string, Index> class_index;
  for (std::size_t k = 0; k < classes.size(); ++k) {
    if (!class_index.emplace(classes[k], static_cast<Index>(k)).second) {
      throw ParseError("duplicate class name '" + classes[k] + "'", header_line);
    }
  }
  FeatureNames names = names_from_json(
      header.contains("names") ? header["names"] : json(), layout, header_line);

  const Index dt = layout.skeleton_dim();
  const Index dobj = layout.object_dim();
  std::vector<std::vector<double>> rows;
  std::vector<Index> labels;
  std::optional<bool> labeled;

  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto row_index = rows.size();
    const std::string where = "row " + std::to_string(row_index);
    json row = json::parse(line, nullptr, false);
    if (row.is_discarded() || !row.is_array()) {
      throw ParseError(where + " is not a JSON array", line_no);
    }
    const auto width = static_cast<Index>(row.size());
    bool has_label = width == dt + dobj + 1;
    if (!has_label && width != dt + dobj) {
      throw ParseError(where + " has " + std::to_string(width) +
                           " entries, expected " + std::to_string(dt + dobj) +
                           " features plus an optional label",
                       line_no);
    }
    if (labeled && *labeled != has_label) {
      throw ParseError(where + ": either every row or no row carries a label",
                       line_no);
    }
    labeled = has_label;

    std::vector<double> values(static_cast<std::size_t>(dt + dobj));
    for (Index k = 0; k < dt + dobj; ++k) {
      const auto& v = row[static_cast<std::size_t>(k)];
      if (!v.is_number()) {
        throw ParseError(where + " entry " + std::to_string(k) +
                             " is not a finite number",
                         line_no);
      }
      const double x = v.get<double>();
      if (!std::isfinite(x)) {
        throw ParseError(where + " entry " + std::to_string(k) +
                             " is not a finite number",
                         line_no);
      }
      values[static_cast<std::size_t>(k)] = x;
    }
    if (has_label) {
      const auto& lab = row.back();
      Index idx = -1;
      if (lab.is_string()) {
        auto it = class_index.find(lab.get<std::string>());
        if (it == class_index.end()) {
          throw ParseError(where + " has unknown label '" +
                               lab.get<std::string>() + "'",
                           line_no);
        }
        idx = it->second;
      } else if (lab.is_number_integer()) {
        idx = lab.get<Index>();
        if (idx < 0 || idx >= static_cast<Index>(classes.size())) {
          throw ParseError(where + " has label index out of range", line_no);
        }
      } else {
        throw ParseError(where + " label must be a string or integer", line_no);
      }
      labels.push_back(idx);
    }
    rows.push_back(std::move(values));
  }
  if (rows.empty()) throw ParseError("file has no instances", line_no);

  const auto n = static_cast<Index>(rows.size());
  Matrix t(dt, n);
  Matrix o(dobj, n);
  for (Index i = 0; i < n; ++i) {
    const auto& r = rows[static_cast<std::size_t>(i)];
    for (Index k = 0; k < dt; ++k) t(k, i) = r[static_cast<std::size_t>(k)];
    for (Index k = 0; k < dobj; ++k) o(k, i) = r[static_cast<std::size_t>(dt + k)];
  }
  DatasetFile file{std::move(layout), std::move(classes), std::move(names),
                   std::move(t),      std::move(o),       std::nullopt};
  if (labeled.value_or(false)) file.labels = std::move(labels);
  return file;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

DatasetFile read_dataset_file(const std::filesystem::path& path) {
  return parse_dataset_text(read_file(path));
}

Dataset load_dataset(const std::filesystem::path& path) {
  return read_dataset_file(path).to_dataset();
}

std::string format_dataset_text(const DatasetFile& file) {
  file.names.validate(file.layout);
  ordered_json header;
  header["format_version"] = kDatasetFormatVersion;
  layout_to_json(file.layout, header);
  header["classes"] = file.class_names;
  header["names"] = names_to_json(file.names);

  std::string out = header.dump();
  out += '\n';
  const Index n = file.skeleton.cols();
  for (Index i = 0; i < n; ++i) {
    json row = json::array();
    for (Index k = 0; k < file.skeleton.rows(); ++k) row.push_back(file.skeleton(k, i));
    for (Index k = 0; k < file.objects.rows(); ++k) row.push_back(file.objects(k, i));
    if (file.labels) {
      row.push_back(file.class_names[static_cast<std::size_t>(
          (*file.labels)[static_cast<std::size_t>(i)])]);
    }
    out += row.dump();
    out += '\n';
  }
  return out;
}

void write_dataset_file(const DatasetFile& file, const std::filesystem::path& path,
                        bool overwrite) {
  write_file_atomic(path, format_dataset_text(file), overwrite);
}

void save_dataset(const Dataset& data, const std::filesystem::path& path,
                  bool overwrite) {
  write_dataset_file(DatasetFile::from_dataset(data), path, overwrite);
}

nlohmann::ordered_json model_to_json(const Model& model) {
  ordered_json j;
  j["format_version"] = kModelFormatVersion;
  ordered_json layout;
  layout_to_json(model.layout(), layout);
  j["layout"] = layout;
  j["class_names"] = model.class_names();
  j["feature_names"] = names_to_json(model.feature_names());
  j["W"] = matrix_to_rows(model.skeleton_weights());
  j["U"] = matrix_to_rows(model.object_weights());
  const auto& h = model.hyperparams();
  ordered_json hp;
  hp["lambda1"] = h.lambda1;
  hp["lambda2"] = h.lambda2;
  hp["tol"] = h.tol;
  hp["max_iters"] = h.max_iters;
  hp["epsilon"] = h.epsilon;
  hp["seed"] = h.seed;
  j["hyperparameters"] = hp;
  j["transform"] = model.transform() ? transform_to_json(*model.transform())
                                     : ordered_json(nullptr);
  return j;
}

Model model_from_json(const json& j) {
  try {
    if (!j.is_object()) throw ParseError("model file is not a JSON object", 0);
    const int version = j.at("format_version").get<int>();
    if (version != kModelFormatVersion) {
      throw ParseError("unsupported model format_version " +
                           std::to_string(version),
                       0);
    }
    FeatureLayout layout = layout_from_json(j.at("layout"), 0);
    auto classes = string_list(j, "class_names", 0);
    const auto c = static_cast<Index>(classes.size());
    FeatureNames names = names_from_json(
        j.contains("feature_names") ? j["feature_names"] : json(), layout, 0);
    Matrix w = matrix_from_rows(j.at("W"), layout.skeleton_dim(), c, "W");
    Matrix u = matrix_from_rows(j.at("U"), layout.object_dim(), c, "U");
    const auto& hp = j.at("hyperparameters");
    SolverConfig cfg;
    cfg.lambda1 = hp.at("lambda1").get<double>();
    cfg.lambda2 = hp.at("lambda2").get<double>();
    cfg.tol = hp.at("tol").get<double>();
    cfg.max_iters = hp.at("max_iters").get<int>();
    cfg.epsilon = hp.at("epsilon").get<double>();
    cfg.seed = hp.at("seed").get<std::uint64_t>();
    std::optional<FeatureTransform> transform;
    if (j.contains("transform") && !j["transform"].is_null()) {
      transform = transform_from_json(j["transform"], layout);
    }
    return Model(std::move(layout), std::move(w), std::move(u),
                 std::move(classes), cfg, std::move(transform), std::move(names));
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed model file: ") + e.what(), 0);
  } catch (const LayoutError& e) {
    throw ParseError(std::string("inconsistent model file: ") + e.what(), 0);
  }
}

Model load_model(const std::filesystem::path& path) {
  json j = json::parse(read_file(path), nullptr, false);
  if (j.is_discarded()) {
    throw ParseError("'" + path.string() + "' is not valid JSON", 0);
  }
  return model_from_json(j);
}

void save_model(const Model& model, const std::filesystem::path& path,
                bool overwrite) {
  write_file_atomic(path, model_to_json(model).dump(2) + "\n", overwrite);
}

nlohmann::ordered_json fit_report_to_json(const FitReport& report) {
  ordered_json j;
  j["schema_version"] = 1;
  j["iterations_run"] = report.iterations_run;
  j["converged"] = report.converged;
  j["wall_time_seconds"] = report.wall_time;
  j["initial_objective"] = report.initial_objective;
  j["objective_trace"] = report.objective_trace;
  j["loss_trace"] = report.loss_trace;
  return j;
}

void write_file_atomic(const std::filesystem::path& path,
                       const std::string& content, bool overwrite) {
  namespace fs = std::filesystem;
  if (!overwrite && fs::exists(path)) {
    throw IoError("'" + path.string() +
                  "' already exists (pass the overwrite option to replace it)");
  }
  std::random_device rd;
  fs::path tmp = path;
  tmp += ".tmp" + std::to_string(rd());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write '" + tmp.string() + "'");
    out << content;
    out.flush();
    if (!out) {
      std::error_code ec;
      fs::remove(tmp, ec);
      throw IoError("failed writing '" + tmp.string() + "'");
    }
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw IoError("cannot move output into place at '" + path.string() + "'");
  }
}

}  // namespace sparsehar
