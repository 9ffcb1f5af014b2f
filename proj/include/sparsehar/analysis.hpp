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

#include "sparsehar/model.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace sparsehar {

// How a weight block is reduced to one importance number.
enum class ImportanceMetric {
  block_norm,  // ||block||_2, never cancels
  signed_sum,  // plain sum of the block's entries
};

struct JointImportance {
  Matrix by_class;  // J x C
  Vector overall;   // J, row sums of by_class
};

struct ObjectImportance {
  Matrix by_block;   // (O*M) x C, object-major rows
  Matrix by_object;  // O x C, modality scores summed per object
};

struct NormalizedColumns {
  Matrix values;
  // True where the raw column summed to zero and was left unchanged.
  std::vector<bool> zero_columns;
};

JointImportance joint_importance(
    const Model& model, ImportanceMetric metric = ImportanceMetric::block_norm);

ObjectImportance object_importance(
    const Model& model, ImportanceMetric metric = ImportanceMetric::block_norm);

// Divides each column by its sum. Throws InputError on negative entries.
NormalizedColumns normalize_columns(const Matrix& raw);

struct ImportanceReport {
  ImportanceMetric metric = ImportanceMetric::block_norm;
  Matrix joint_by_class;
  Vector joint_overall;
  Matrix object_modality_by_class;
  Matrix object_by_class;
  // Column-stochastic versions. With the signed metric these are computed
  // from absolute values so they stay a distribution.
  NormalizedColumns joint_normalized;
  NormalizedColumns object_modality_normalized;
};

ImportanceReport importance_report(
    const Model& model, ImportanceMetric metric = ImportanceMetric::block_norm);

// Optional row/column restriction for rendered reports. Empty means all.
struct ReportSelection {
  std::vector<Index> joints;
  std::vector<Index> classes;
  // Throws InputError if an index is outside the model.
  void validate(const Model& model) const;
};

nlohmann::json report_to_json(const ImportanceReport& report, const Model& model,
                              const ReportSelection& selection = {});

// Aligned plain-text tables: normalized joint importance per class, then
// normalized attribute importance per class.
std::string report_to_table(const ImportanceReport& report, const Model& model,
                            const ReportSelection& selection = {});

// Fraction of a nonnegative column's mass on the given rows.
double mass_fraction(const Matrix& raw, Index column,
                     const std::vector<Index>& rows);

}  // namespace sparsehar
