#pragma once

#include <span>
#include <vector>

#include <json.hpp>

#include "clickbait/vectors.hpp"

namespace clickbait::representations {

/// Per-column z-scoring with statistics taken from training rows only.
class Standardizer {
 public:
  Standardizer() = default;

  /// Population mean and standard deviation per column; a constant column
  /// gets scale 1 so it maps to 0. Throws ShapeError on ragged rows.
  static Standardizer fit(const std::vector<std::vector<double>>& rows);

  std::vector<double> apply(std::span<const double> row) const;

  std::size_t dim() const noexcept { return mean_.size(); }
  const std::vector<double>& mean() const noexcept { return mean_; }
  const std::vector<double>& scale() const noexcept { return scale_; }

  nlohmann::json to_json() const;
  static Standardizer from_json(const nlohmann::json& j);

 private:
  std::vector<double> mean_;
  std::vector<double> scale_;
};

/// Early fusion: [features || embedding]. The feature block is standardized
/// first when a standardizer is given. Throws NumericError on non-finite input.
DenseVector fuse(std::span<const double> features, const DenseVector& embedding,
                 const Standardizer* standardizer = nullptr);

}  // namespace clickbait::representations
