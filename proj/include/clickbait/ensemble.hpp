#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace clickbait::ensemble {

/// Dense row-major matrix.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}

  /// Throws ShapeError on ragged input.
  static Matrix from_rows(const std::vector<std::vector<double>>& rows);

  double at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
  double& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  std::span<const double> row(std::size_t r) const { return {data.data() + r * cols, cols}; }
};

enum class ModelKind { random_forest, gradient_boosted };

std::string_view to_string(ModelKind k);
ModelKind parse_model_kind(std::string_view s);

struct EnsembleParams {
  std::size_t n_trees = 100;
  /// 0 grows until leaves are pure or too small.
  std::size_t max_depth = 0;
  double learning_rate = 0.1;
  /// Forest: bootstrap size as a fraction of the rows. Boosted: rows sampled
  /// without replacement per round.
  double subsample_ratio = 1.0;
  /// Forest: fraction of the d features tried per split, 0 meaning
  /// floor(sqrt(d)). Boosted: fraction of columns sampled per tree, 0 meaning all.
  double feature_subsample = 0.0;
  std::size_t min_samples_leaf = 1;
  std::uint64_t seed = 42;
  double lambda = 1.0;
  /// Nodes with more samples than this use histogram split finding.
  std::size_t histogram_threshold = 4096;
  std::size_t histogram_bins = 256;
  /// 0 uses the hardware concurrency.
  std::size_t threads = 0;

  static EnsembleParams forest_defaults();
  static EnsembleParams boosted_defaults();

  nlohmann::json to_json() const;
  static EnsembleParams from_json(const nlohmann::json& j);
};

/// Flat-array binary tree. Node 0 is the root; a node is a leaf when
/// feature[i] < 0. Samples with x[feature] < threshold go left.
struct DecisionTree {
  std::vector<std::int32_t> feature;
  std::vector<double> threshold;
  std::vector<std::int32_t> left;
  std::vector<std::int32_t> right;
  /// Forest leaves: class-1 frequency. Boosted leaves: additive score.
  std::vector<double> value;
  /// Impurity or loss reduction achieved by each internal node.
  std::vector<double> gain;

  std::size_t node_count() const noexcept { return feature.size(); }
  std::size_t depth() const;
  double predict(std::span<const double> x) const;

  /// Children must point forward and stay in range; throws IntegrityError.
  void validate(std::size_t n_features) const;
};

struct EnsembleModel {
  ModelKind kind = ModelKind::gradient_boosted;
  std::vector<DecisionTree> trees;
  EnsembleParams params;
  std::vector<std::string> feature_schema;
  /// Prior log-odds; used only by boosted models.
  double base_score = 0.0;
  /// Boosted models: mean log-loss on the training rows, before the first
  /// round and after each round.
  std::vector<double> training_loss;

  bool trained() const noexcept { return !feature_schema.empty(); }
  std::size_t n_features() const noexcept { return feature_schema.size(); }
};

EnsembleModel train_random_forest(const Matrix& X, std::span<const int> y, const EnsembleParams& params,
                                  std::vector<std::string> feature_schema = {});

EnsembleModel train_gradient_boosted(const Matrix& X, std::span<const int> y, const EnsembleParams& params,
                                     std::vector<std::string> feature_schema = {});

EnsembleModel train(ModelKind kind, const Matrix& X, std::span<const int> y, const EnsembleParams& params,
                    std::vector<std::string> feature_schema = {});

/// Grows one Gini tree on weighted samples using every feature at each split.
/// No class-balance precondition, so a single-class input yields one leaf.
DecisionTree fit_gini_tree(const Matrix& X, std::span<const int> y, std::span<const double> weights,
                           std::size_t max_depth, std::size_t min_samples_leaf = 1);

double predict_proba(const EnsembleModel& model, std::span<const double> x);
std::vector<double> predict_proba(const EnsembleModel& model, const Matrix& X);

/// Normalized total gain per feature, in schema order. A model without any
/// split gets a uniform distribution. Throws StateError on an untrained model.
std::vector<std::pair<std::string, double>> feature_importance(const EnsembleModel& model);

inline constexpr int kModelFormatVersion = 1;

nlohmann::json model_to_json(const EnsembleModel& model);
/// Throws CompatibilityError on a version mismatch, IntegrityError on a bad
/// checksum or malformed structure.
EnsembleModel model_from_json(const nlohmann::json& j);

void save_model(const EnsembleModel& model, const std::filesystem::path& path);
EnsembleModel load_model(const std::filesystem::path& path);

double sigmoid(double z);

/// Mean binary cross-entropy with probabilities clipped away from 0 and 1.
double log_loss(std::span<const int> y, std::span<const double> p);

}  // namespace clickbait::ensemble
