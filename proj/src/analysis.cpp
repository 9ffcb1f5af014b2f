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

#include "sparsehar/analysis.hpp"

#include "sparsehar/error.hpp"
#include "sparsehar/norms.hpp"

#include <cstdio>
#include <numeric>
#include <sstream>

namespace sparsehar {
namespace {

Matrix block_scores(const Matrix& weights, const std::vector<Block>& blocks,
                    ImportanceMetric metric) {
  if (metric == ImportanceMetric::block_norm) return block_norms(weights, blocks);
  Matrix out(static_cast<Index>(blocks.size()), weights.cols());
  for (Index c = 0; c < weights.cols(); ++c) {
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      out(static_cast<Index>(b), c) =
          weights.col(c).segment(blocks[b].offset, blocks[b].size).sum();
    }
  }
  return out;
}

std::vector<Index> all_indices(Index n) {
  std::vector<Index> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), Index{0});
  return v;
}

nlohmann::json matrix_rows(const Matrix& m) {
  auto rows = nlohmann::json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    auto row = nlohmann::json::array();
    for (Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

const char* metric_name(ImportanceMetric metric) {
  return metric == ImportanceMetric::block_norm ? "block_norm" : "signed_sum";
}

}  // namespace

JointImportance joint_importance(const Model& model, ImportanceMetric metric) {
  JointImportance out;
  out.by_class = block_scores(model.skeleton_weights(),
                              model.layout().joint_blocks(), metric);
  out.overall = out.by_class.rowwise().sum();
  return out;
}

ObjectImportance object_importance(const Model& model, ImportanceMetric metric) {
  const auto& layout = model.layout();
  ObjectImportance out;
  out.by_block = block_scores(model.object_weights(),
                              layout.attribute_blocks(), metric);
  out.by_object = Matrix::Zero(layout.object_count(), model.class_count());
  for (Index o = 0; o < layout.object_count(); ++o) {
    for (Index m = 0; m < layout.modality_count(); ++m) {
      out.by_object.row(o) += out.by_block.row(layout.attribute_block_index(o, m));
    }
  }
  return out;
}

NormalizedColumns normalize_columns(const Matrix& raw) {
  if ((raw.array() < 0.0).any()) {
    throw InputError("importance matrix has negative entries");
  }
  NormalizedColumns out{raw, std::vector<bool>(static_cast<std::size_t>(raw.cols()))};
  for (Index c = 0; c < raw.cols(); ++c) {
    const double total = raw.col(c).sum();
    if (total > 0.0) {
      out.values.col(c) /= total;
    } else {
      out.zero_columns[static_cast<std::size_t>(c)] = true;
    }
  }
  return out;
}

ImportanceReport importance_report(const Model& model, ImportanceMetric metric) {
  ImportanceReport r;
  r.metric = metric;
  auto joints = joint_importance(model, metric);
  auto objects = object_importance(model, metric);
  r.joint_by_class = std::move(joints.by_class);
  r.joint_overall = std::move(joints.overall);
  r.object_modality_by_class = std::move(objects.by_block);
  r.object_by_class = std::move(objects.by_object);
  r.joint_normalized = normalize_columns(r.joint_by_class.cwiseAbs());
  r.object_modality_normalized =
      normalize_columns(r.object_modality_by_class.cwiseAbs());
  return r;
}

void ReportSelection::validate(const Model& model) const {
  for (Index j : joints) {
    if (j < 0 || j >= model.layout().joint_count()) {
      throw InputError("selected joint " + std::to_string(j) + " out of range");
    }
  }
  for (Index c : classes) {
    if (c < 0 || c >= model.class_count()) {
      throw InputError("selected class " + std::to_string(c) + " out of range");
    }
  }
}

nlohmann::json report_to_json(const ImportanceReport& report, const Model& model,
                              const ReportSelection& selection) {
  selection.validate(model);
  const auto& names = model.feature_names();
  nlohmann::json j;
  j["schema_version"] = 1;
  j["metric"] = metric_name(report.metric);
  j["classes"] = model.class_names();
  j["joints"] = names.joints;
  j["objects"] = names.objects;
  j["modalities"] = names.modalities;
  j["joint_by_class"] = matrix_rows(report.joint_by_class);
  j["joint_overall"] = std::vector<double>(report.joint_overall.begin(),
                                           report.joint_overall.end());
  j["joint_normalized"] = matrix_rows(report.joint_normalized.values);
  j["joint_zero_columns"] = report.joint_normalized.zero_columns;
  j["object_modality_by_class"] = matrix_rows(report.object_modality_by_class);
  j["object_modality_normalized"] =
      matrix_rows(report.object_modality_normalized.values);
  j["object_modality_zero_columns"] = report.object_modality_normalized.zero_columns;
  j["object_by_class"] = matrix_rows(report.object_by_class);
  j["selected_joints"] = selection.joints;
  j["selected_classes"] = selection.classes;
  return j;
}

std::string report_to_table(const ImportanceReport& report, const Model& model,
                            const ReportSelection& selection) {
  selection.validate(model);
  const auto& layout = model.layout();
  const auto& names = model.feature_names();
  const auto joints =
      selection.joints.empty() ? all_indices(layout.joint_count()) : selection.joints;
  const auto classes =
      selection.classes.empty() ? all_indices(model.class_count()) : selection.classes;

  std::ostringstream out;
  char buf[64];
  auto header = [&](const char* title) {
    std::snprintf(buf, sizeof buf, "%-24s", title);
    out << buf;
    for (Index c : classes) {
      std::snprintf(buf, sizeof buf, " %12.12s",
                    model.class_names()[static_cast<std::size_t>(c)].c_str());
      out << buf;
    }
    out << '\n';
  };
  auto cell = [&](double v) {
    std::snprintf(buf, sizeof buf, " %12.4f", v);
    out << buf;
  };
  auto flags = [&](const std::vector<bool>& zero) {
    bool any = false;
    for (Index c : classes) any = any || zero[static_cast<std::size_t>(c)];
    if (!any) return;
    std::snprintf(buf, sizeof buf, "%-24s", "(all-zero column)");
    out << buf;
    for (Index c : classes) {
      std::snprintf(buf, sizeof buf, " %12s",
                    zero[static_cast<std::size_t>(c)] ? "yes" : "");
      out << buf;
    }
    out << '\n';
  };

  out << "Joint importance (" << metric_name(report.metric)
      << ", column-normalized)\n";
  header("joint");
  for (Index j : joints) {
    std::snprintf(buf, sizeof buf, "%-24.24s",
                  names.joints[static_cast<std::size_t>(j)].c_str());
    out << buf;
    for (Index c : classes) cell(report.joint_normalized.values(j, c));
    out << '\n';
  }
  flags(report.joint_normalized.zero_columns);

  out << "\nAttribute importance (" << metric_name(report.metric)
      << ", column-normalized)\n";
  header("object/modality");
  for (Index o = 0; o < layout.object_count(); ++o) {
    for (Index m = 0; m < layout.modality_count(); ++m) {
      const std::string label = names.objects[static_cast<std::size_t>(o)] + "/" +
                                names.modalities[static_cast<std::size_t>(m)];
      std::snprintf(buf, sizeof buf, "%-24.24s", label.c_str());
      out << buf;
      const Index row = layout.attribute_block_index(o, m);
      for (Index c : classes) cell(report.object_modality_normalized.values(row, c));
      out << '\n';
    }
  }
  flags(report.object_modality_normalized.zero_columns);
  return out.str();
}

double mass_fraction(const Matrix& raw, Index column,
                     const std::vector<Index>& rows) {
  const double total = raw.col(column).sum();
  if (!(total > 0.0)) return 0.0;
  double part = 0.0;
  for (Index r : rows) part += raw(r, column);
  return part / total;
}

}  // namespace sparsehar
