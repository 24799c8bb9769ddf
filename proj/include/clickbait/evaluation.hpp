#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

namespace clickbait::evaluation {

struct ConfusionMatrix {
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;
  std::size_t tn = 0;

  std::size_t total() const noexcept { return tp + fp + fn + tn; }
  bool operator==(const ConfusionMatrix&) const = default;
};

struct EvalReport {
  ConfusionMatrix matrix;
  double accuracy = 0.0;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::optional<double> auc;
  std::string model_tag;
  std::string split_tag;
};

/// A record is predicted positive when proba >= threshold. Throws ShapeError
/// on a length mismatch or empty input.
ConfusionMatrix confusion(std::span<const int> labels, std::span<const double> probas, double threshold = 0.5);

/// Undefined ratios (0/0) are reported as 0.
EvalReport metrics(const ConfusionMatrix& m);

/// Mann-Whitney AUC with ties credited one half. Throws UndefinedMetricError
/// when only one class is present.
double roc_auc(std::span<const int> labels, std::span<const double> probas);

/// Confusion, metrics and AUC in one call. AUC is left empty when undefined.
EvalReport evaluate(std::span<const int> labels, std::span<const double> probas, std::string model_tag = {},
                    std::string split_tag = {}, double threshold = 0.5);

nlohmann::json to_json(const EvalReport& r);
EvalReport report_from_json(const nlohmann::json& j);

enum class ReportFormat { text, json, markdown };

ReportFormat parse_report_format(std::string_view s);

/// Renders reports sorted by F1 descending (stable for ties), with every
/// metric printed to three decimals.
std::string compare_report(std::vector<EvalReport> reports, ReportFormat format);

}  // namespace clickbait::evaluation
