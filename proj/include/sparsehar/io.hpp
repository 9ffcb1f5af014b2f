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

#include "sparsehar/dataset.hpp"
#include "sparsehar/model.hpp"
#include "sparsehar/solver.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace sparsehar {

inline constexpr int kDatasetFormatVersion = 1;
inline constexpr int kModelFormatVersion = 1;

// Contents of a dataset file. Files store one instance per line; the
// matrices here are already transposed to one instance per column.
// `labels` is empty for unlabeled files.
struct DatasetFile {
  FeatureLayout layout;
  std::vector<std::string> class_names;
  FeatureNames names;
  Matrix skeleton;
  Matrix objects;
  std::optional<std::vector<Index>> labels;

  // Throws InputError if the file carries no labels.
  Dataset to_dataset() const;
  static DatasetFile from_dataset(const Dataset& data);
};

// Reads the line-oriented format: a JSON header object on line 1 with keys
// joint_dims, object_count, modality_dims, classes, names; then one JSON
// array per instance: [skeleton..., objects..., "label"]. The label is a
// class name or a class index and may be omitted on every row.
// Errors carry the 1-based line number.
DatasetFile read_dataset_file(const std::filesystem::path& path);
DatasetFile parse_dataset_text(const std::string& text);

Dataset load_dataset(const std::filesystem::path& path);

std::string format_dataset_text(const DatasetFile& file);

// Writes atomically. Refuses to replace an existing file unless `overwrite`.
void write_dataset_file(const DatasetFile& file,
                        const std::filesystem::path& path,
                        bool overwrite = false);
void save_dataset(const Dataset& data, const std::filesystem::path& path,
                  bool overwrite = false);

nlohmann::ordered_json model_to_json(const Model& model);
Model model_from_json(const nlohmann::json& j);
Model load_model(const std::filesystem::path& path);
void save_model(const Model& model, const std::filesystem::path& path,
                bool overwrite = false);

nlohmann::ordered_json fit_report_to_json(const FitReport& report);

// Writes `content` to a temporary sibling and renames it over `path`.
void write_file_atomic(const std::filesystem::path& path,
                       const std::string& content, bool overwrite);
std::string read_file(const std::filesystem::path& path);

}  // namespace sparsehar
