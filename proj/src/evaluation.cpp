#include "clickbait/evaluation.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <sstream>

#include "clickbait/error.hpp"

namespace clickbait::evaluation {

using nlohmann::json;

ConfusionMatrix confusion(std::span<const int> labels, std::span<const double> probas, double threshold) {
  if (labels.size() != probas.size())
    throw ShapeError("confusion: " + std::to_string(labels.size()) + " labels but " + std::to_string(probas.size()) +
                     " predictions");
  if (labels.empty()) throw ShapeError("confusion: no records");
  ConfusionMatrix m;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const bool predicted = probas[i] >= threshold;
    const bool actual = labels[i] != 0;
    if (predicted && actual) ++m.tp;
    else if (predicted) ++m.fp;
    else if (actual) ++m.fn;
    else ++m.tn;
  }
  return m;
}

namespace {

double ratio(std::size_t num, std::size_t den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

}  // namespace

EvalReport metrics(const ConfusionMatrix& m) {
  EvalReport r;
  r.matrix = m;
  r.accuracy = ratio(m.tp + m.tn, m.total());
  r.precision = ratio(m.tp, m.tp + m.fp);
  r.recall = ratio(m.tp, m.tp + m.fn);
  const double s = r.precision + r.recall;
  r.f1 = s > 0.0 ? 2.0 * r.precision * r.recall / s : 0.0;
  return r;
}

double roc_auc(std::span<const int> labels, std::span<const double> probas) {
  if (labels.size() != probas.size()) throw ShapeError("roc_auc: length mismatch");
  std::vector<std::size_t> order(labels.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return probas[a] < probas[b]; });

  std::size_t n_pos = 0;
  for (int v : labels) n_pos += v != 0 ? 1 : 0;
  const std::size_t n_neg = labels.size() - n_pos;
  if (n_pos == 0 || n_neg == 0) throw UndefinedMetricError("roc_auc: both classes must be present");

  // Count, in half-units, positive/negative pairs where the positive wins.
  std::size_t negatives_below = 0;
  std::size_t twice_wins = 0;
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    std::size_t pos_here = 0, neg_here = 0;
    while (j < order.size() && probas[order[j]] == probas[order[i]]) {
      if (labels[order[j]] != 0) ++pos_here;
      else ++neg_here;
      ++j;
    }
    twice_wins += pos_here * (2 * negatives_below + neg_here);
    negatives_below += neg_here;
    i = j;
  }
  return static_cast<double>(twice_wins) / (2.0 * static_cast<double>(n_pos) * static_cast<double>(n_neg));
}

EvalReport evaluate(std::span<const int> labels, std::span<const double> probas, std::string model_tag,
                    std::string split_tag, double threshold) {
  EvalReport r = metrics(confusion(labels, probas, threshold));
  try {
    r.auc = roc_auc(labels, probas);
  } catch (const UndefinedMetricError&) {
    r.auc.reset();
  }
  r.model_tag = std::move(model_tag);
  r.split_tag = std::move(split_tag);
  return r;
}

json to_json(const EvalReport& r) {
  return {{"model", r.model_tag},
          {"split", r.split_tag},
          {"confusion", {{"tp", r.matrix.tp}, {"fp", r.matrix.fp}, {"fn", r.matrix.fn}, {"tn", r.matrix.tn}}},
          {"accuracy", r.accuracy},
          {"precision", r.precision},
          {"recall", r.recall},
          {"f1", r.f1},
          {"auc", r.auc ? json(*r.auc) : json(nullptr)}};
}

EvalReport report_from_json(const json& j) {
  EvalReport r;
  try {
    r.model_tag = j.value("model", "");
    r.split_tag = j.value("split", "");
    const auto& c = j.at("confusion");
    r.matrix = {c.at("tp").get<std::size_t>(), c.at("fp").get<std::size_t>(), c.at("fn").get<std::size_t>(),
                c.at("tn").get<std::size_t>()};
    r.accuracy = j.at("accuracy").get<double>();
    r.precision = j.at("precision").get<double>();
    r.recall = j.at("recall").get<double>();
    r.f1 = j.at("f1").get<double>();
    if (j.contains("auc") && !j["auc"].is_null()) r.auc = j["auc"].get<double>();
  } catch (const json::exception& e) {
    throw SchemaError(std::string("malformed evaluation report: ") + e.what());
  }
  return r;
}

ReportFormat parse_report_format(std::string_view s) {
  if (s == "text") return ReportFormat::text;
  if (s == "json") return ReportFormat::json;
  if (s == "markdown" || s == "md") return ReportFormat::markdown;
  throw DomainError("unknown report format: " + std::string(s));
}

namespace {

std::string fixed3(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

std::string auc_cell(const EvalReport& r) { return r.auc ? fixed3(*r.auc) : "n/a"; }

std::string label_of(const EvalReport& r) {
  if (r.split_tag.empty()) return r.model_tag;
  return r.model_tag + " (" + r.split_tag + ")";
}

}  // namespace

std::string compare_report(std::vector<EvalReport> reports, ReportFormat format) {
  std::stable_sort(reports.begin(), reports.end(), [](const EvalReport& a, const EvalReport& b) { return a.f1 > b.f1; });
  std::ostringstream out;
  switch (format) {
    case ReportFormat::json: {
      json rows = json::array();
      for (const auto& r : reports) {
        rows.push_back({{"model", r.model_tag},
                        {"split", r.split_tag},
                        {"accuracy", fixed3(r.accuracy)},
                        {"precision", fixed3(r.precision)},
                        {"recall", fixed3(r.recall)},
                        {"f1", fixed3(r.f1)},
                        {"auc", r.auc ? json(fixed3(*r.auc)) : json(nullptr)}});
      }
      out << rows.dump(2) << '\n';
      break;
    }
    case ReportFormat::markdown: {
      out << "| Model | Acc. | Prec. | Rec. | F1 | AUC |\n";
      out << "|---|---|---|---|---|---|\n";
      for (const auto& r : reports) {
        out << "| " << label_of(r) << " | " << fixed3(r.accuracy) << " | " << fixed3(r.precision) << " | "
            << fixed3(r.recall) << " | " << fixed3(r.f1) << " | " << auc_cell(r) << " |\n";
      }
      break;
    }
    case ReportFormat::text: {
      std::size_t width = 5;
      for (const auto& r : reports) width = std::max(width, label_of(r).size());
      auto pad = [&](const std::string& s) { return s + std::string(width - s.size() + 2, ' '); };
      out << pad("Model") << "Acc.   Prec.  Rec.   F1     AUC\n";
      for (const auto& r : reports) {
        out << pad(label_of(r)) << fixed3(r.accuracy) << "  " << fixed3(r.precision) << "  " << fixed3(r.recall)
            << "  " << fixed3(r.f1) << "  " << auc_cell(r) << '\n';
      }
      break;
    }
  }
  return out.str();
}

}  // namespace clickbait::evaluation
