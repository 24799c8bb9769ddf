#include "clickbait/fusion.hpp"

#include <cmath>

#include "clickbait/error.hpp"

namespace clickbait::representations {

Standardizer Standardizer::fit(const std::vector<std::vector<double>>& rows) {
  Standardizer s;
  if (rows.empty()) return s;
  const std::size_t d = rows.front().size();
  s.mean_.assign(d, 0.0);
  s.scale_.assign(d, 0.0);
  for (const auto& r : rows) {
    if (r.size() != d) throw ShapeError("standardizer: ragged rows");
    for (std::size_t j = 0; j < d; ++j) s.mean_[j] += r[j];
  }
  const double n = static_cast<double>(rows.size());
  for (auto& m : s.mean_) m /= n;
  for (const auto& r : rows) {
    for (std::size_t j = 0; j < d; ++j) {
      const double dv = r[j] - s.mean_[j];
      s.scale_[j] += dv * dv;
    }
  }
  for (auto& v : s.scale_) {
    v = std::sqrt(v / n);
    if (!(v > 0.0) || !std::isfinite(v)) v = 1.0;
  }
  return s;
}

std::vector<double> Standardizer::apply(std::span<const double> row) const {
  if (row.size() != mean_.size())
    throw ShapeError("standardizer expects " + std::to_string(mean_.size()) + " columns, got " +
                     std::to_string(row.size()));
  std::vector<double> out(row.size());
  for (std::size_t j = 0; j < row.size(); ++j) out[j] = (row[j] - mean_[j]) / scale_[j];
  return out;
}

nlohmann::json Standardizer::to_json() const { return {{"mean", mean_}, {"scale", scale_}}; }

Standardizer Standardizer::from_json(const nlohmann::json& j) {
  Standardizer s;
  s.mean_ = j.at("mean").get<std::vector<double>>();
  s.scale_ = j.at("scale").get<std::vector<double>>();
  if (s.mean_.size() != s.scale_.size()) throw ShapeError("standardizer: mean and scale lengths differ");
  return s;
}

DenseVector fuse(std::span<const double> features, const DenseVector& embedding, const Standardizer* standardizer) {
  for (double v : features) {
    if (!std::isfinite(v)) throw NumericError("fuse: non-finite feature value");
  }
  for (double v : embedding.values) {
    if (!std::isfinite(v)) throw NumericError("fuse: non-finite embedding value");
  }
  DenseVector out;
  out.provenance = Provenance::fused;
  if (standardizer && standardizer->dim() > 0) {
    out.values = standardizer->apply(features);
  } else {
    out.values.assign(features.begin(), features.end());
  }
  out.values.insert(out.values.end(), embedding.values.begin(), embedding.values.end());
  out.zero = l2_norm(out.values) == 0.0;
  return out;
}

}  // namespace clickbait::representations
