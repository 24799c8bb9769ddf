#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "clickbait/corpus.hpp"
#include "clickbait/embeddings.hpp"
#include "clickbait/ensemble.hpp"
#include "clickbait/fusion.hpp"
#include "clickbait/informativeness.hpp"
#include "clickbait/textstats.hpp"
#include "clickbait/tfidf.hpp"

namespace clickbait::pipeline {

enum class Representation { features, tfidf, word_vectors, remote_embedding, hybrid };

std::string_view to_string(Representation r);
Representation parse_representation(std::string_view s);

enum class HybridSource { remote_embedding, word_vectors };

struct FeaturizerConfig {
  Representation representation = Representation::features;
  std::string subset = "default15";
  /// Appends the composite baitness score as an extra feature column.
  bool include_baitness = false;
  representations::TfidfOptions tfidf{1, 2, false, 1000};
  std::filesystem::path word_vectors;
  std::size_t embedding_dim = 1000;
  std::string embedding_model = "text-embedding-3-large";
  HybridSource hybrid_source = HybridSource::remote_embedding;
  /// Z-scores the feature block of hybrid rows with train statistics.
  bool standardize = true;

  nlohmann::json to_json() const;
  static FeaturizerConfig from_json(const nlohmann::json& j);
};

/// Shared, lazily created heavy resources: lexicons, the word-vector table
/// and the remote embedding client.
class Resources {
 public:
  explicit Resources(textstats::LexiconSet lexicons = textstats::LexiconSet::defaults());

  const textstats::LexiconSet& lexicons() const noexcept { return lexicons_; }

  /// Loads the table on first use; the path must stay the same across calls.
  const representations::WordVectorTable& word_vectors(const std::filesystem::path& path);
  const representations::WordVectorTable* loaded_word_vectors() const noexcept { return table_.get(); }

  void set_embedding_config(representations::RemoteEmbeddingConfig config);
  /// Built from the environment unless a config was set.
  representations::RemoteEmbeddingClient& embeddings(const std::string& model);

 private:
  textstats::LexiconSet lexicons_;
  std::filesystem::path table_path_;
  std::unique_ptr<representations::WordVectorTable> table_;
  std::optional<representations::RemoteEmbeddingConfig> embedding_config_;
  std::unique_ptr<representations::RemoteEmbeddingClient> client_;
};

/// Turns records into model-ready rows under a representation, holding any
/// state fitted on the training split (vocabulary, standardizer).
class Featurizer {
 public:
  static Featurizer fit(const FeaturizerConfig& config, const std::vector<corpus::CorpusRecord>& train,
                        Resources& resources);

  ensemble::Matrix transform(const std::vector<corpus::CorpusRecord>& records, Resources& resources) const;

  const FeaturizerConfig& config() const noexcept { return config_; }
  std::vector<std::string> column_names() const;
  std::size_t dim() const { return column_names().size(); }

  nlohmann::json to_json() const;
  static Featurizer from_json(const nlohmann::json& j);

 private:
  std::vector<std::vector<double>> feature_block(const std::vector<corpus::CorpusRecord>& records,
                                                 Resources& resources) const;
  std::vector<representations::DenseVector> embedding_block(const std::vector<corpus::CorpusRecord>& records,
                                                            Resources& resources) const;

  FeaturizerConfig config_;
  informativeness::FeatureSubset subset_;
  std::optional<representations::VocabularyModel> vocabulary_;
  std::optional<representations::Standardizer> standardizer_;
  std::size_t embedding_width_ = 0;
};

std::vector<int> labels_of(const std::vector<corpus::CorpusRecord>& records);

/// A trained model directory: model.json plus featurizer.json.
struct ModelBundle {
  Featurizer featurizer;
  ensemble::EnsembleModel model;

  void save(const std::filesystem::path& dir) const;
  static ModelBundle load(const std::filesystem::path& dir);
};

}  // namespace clickbait::pipeline
