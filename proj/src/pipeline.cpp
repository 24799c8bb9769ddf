#include "clickbait/pipeline.hpp"

#include <fstream>
#include <sstream>

#include "clickbait/baitness.hpp"
#include "clickbait/error.hpp"

namespace clickbait::pipeline {

using nlohmann::json;
using representations::DenseVector;

std::string_view to_string(Representation r) {
  switch (r) {
    case Representation::features: return "features";
    case Representation::tfidf: return "tfidf";
    case Representation::word_vectors: return "word_vectors";
    case Representation::remote_embedding: return "remote_embedding";
    case Representation::hybrid: return "hybrid";
  }
  return "features";
}

Representation parse_representation(std::string_view s) {
  if (s == "features") return Representation::features;
  if (s == "tfidf") return Representation::tfidf;
  if (s == "word_vectors" || s == "word-vectors") return Representation::word_vectors;
  if (s == "remote_embedding" || s == "remote-embedding" || s == "embedding") return Representation::remote_embedding;
  if (s == "hybrid") return Representation::hybrid;
  throw DomainError("unknown representation: " + std::string(s));
}

json FeaturizerConfig::to_json() const {
  return {{"representation", to_string(representation)},
          {"subset", subset},
          {"include_baitness", include_baitness},
          {"tfidf",
           {{"ngram_range", {tfidf.ngram_min, tfidf.ngram_max}},
            {"cleaned", tfidf.cleaned},
            {"max_features", tfidf.max_features}}},
          {"word_vectors", word_vectors.string()},
          {"embedding_dim", embedding_dim},
          {"embedding_model", embedding_model},
          {"hybrid_source", hybrid_source == HybridSource::word_vectors ? "word_vectors" : "remote_embedding"},
          {"standardize", standardize}};
}

FeaturizerConfig FeaturizerConfig::from_json(const json& j) {
  FeaturizerConfig c;
  c.representation = parse_representation(j.at("representation").get<std::string>());
  c.subset = j.at("subset").get<std::string>();
  c.include_baitness = j.at("include_baitness").get<bool>();
  const auto& t = j.at("tfidf");
  c.tfidf.ngram_min = t.at("ngram_range").at(0).get<std::size_t>();
  c.tfidf.ngram_max = t.at("ngram_range").at(1).get<std::size_t>();
  c.tfidf.cleaned = t.at("cleaned").get<bool>();
  c.tfidf.max_features = t.at("max_features").get<std::size_t>();
  c.word_vectors = j.at("word_vectors").get<std::string>();
  c.embedding_dim = j.at("embedding_dim").get<std::size_t>();
  c.embedding_model = j.at("embedding_model").get<std::string>();
  c.hybrid_source =
      j.at("hybrid_source").get<std::string>() == "word_vectors" ? HybridSource::word_vectors : HybridSource::remote_embedding;
  c.standardize = j.at("standardize").get<bool>();
  return c;
}

Resources::Resources(textstats::LexiconSet lexicons) : lexicons_(std::move(lexicons)) {}

const representations::WordVectorTable& Resources::word_vectors(const std::filesystem::path& path) {
  if (path.empty()) throw ConfigurationError("this representation needs a word-vector file (--word-vectors)");
  if (table_) {
    if (path != table_path_) throw ConfigurationError("a different word-vector file is already loaded");
    return *table_;
  }
  table_ = std::make_unique<representations::WordVectorTable>(representations::WordVectorTable::load(path));
  table_path_ = path;
  return *table_;
}

void Resources::set_embedding_config(representations::RemoteEmbeddingConfig config) {
  embedding_config_ = std::move(config);
  client_.reset();
}

representations::RemoteEmbeddingClient& Resources::embeddings(const std::string& model) {
  if (!client_) {
    auto config = embedding_config_ ? *embedding_config_ : representations::RemoteEmbeddingConfig::from_environment();
    config.model = model;
    client_ = std::make_unique<representations::RemoteEmbeddingClient>(std::move(config));
  }
  return *client_;
}

namespace {

bool uses_features(Representation r) { return r == Representation::features || r == Representation::hybrid; }

bool uses_embedding(const FeaturizerConfig& c) {
  return c.representation == Representation::word_vectors || c.representation == Representation::remote_embedding ||
         c.representation == Representation::hybrid;
}

bool embedding_is_remote(const FeaturizerConfig& c) {
  return c.representation == Representation::remote_embedding ||
         (c.representation == Representation::hybrid && c.hybrid_source == HybridSource::remote_embedding);
}

}  // namespace

std::vector<std::vector<double>> Featurizer::feature_block(const std::vector<corpus::CorpusRecord>& records,
                                                           Resources& resources) const {
  const representations::WordVectorTable* table = nullptr;
  if (!config_.word_vectors.empty()) table = &resources.word_vectors(config_.word_vectors);
  std::vector<std::vector<double>> rows;
  rows.reserve(records.size());
  for (const auto& r : records) {
    const auto f = informativeness::extract_features(r, resources.lexicons(), table);
    auto row = subset_.select(f);
    if (config_.include_baitness) row.push_back(baitness::baitness(f).composite);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<DenseVector> Featurizer::embedding_block(const std::vector<corpus::CorpusRecord>& records,
                                                     Resources& resources) const {
  std::vector<DenseVector> out;
  if (embedding_is_remote(config_)) {
    std::vector<std::string> titles;
    titles.reserve(records.size());
    for (const auto& r : records) titles.push_back(r.title);
    out = resources.embeddings(config_.embedding_model).fetch(titles, config_.embedding_dim);
  } else {
    const auto& table = resources.word_vectors(config_.word_vectors);
    out.reserve(records.size());
    for (const auto& r : records) out.push_back(representations::mean_pool_word_vectors(r.title, table));
  }
  return out;
}

Featurizer Featurizer::fit(const FeaturizerConfig& config, const std::vector<corpus::CorpusRecord>& train,
                           Resources& resources) {
  if (train.empty()) throw FitError("cannot fit a featurizer on an empty training split");
  Featurizer f;
  f.config_ = config;
  f.subset_ = informativeness::resolve_subset(config.subset);
  if (uses_embedding(config) && embedding_is_remote(config)) representations::check_embedding_dim(config.embedding_dim);
  if (config.representation == Representation::tfidf) {
    std::vector<std::string> docs;
    docs.reserve(train.size());
    for (const auto& r : train) docs.push_back(r.title);
    f.vocabulary_ = representations::VocabularyModel::fit(docs, config.tfidf);
  }
  if (uses_embedding(config)) {
    f.embedding_width_ = embedding_is_remote(config) ? config.embedding_dim : resources.word_vectors(config.word_vectors).dim();
  }
  if (config.representation == Representation::hybrid && config.standardize) {
    f.standardizer_ = representations::Standardizer::fit(f.feature_block(train, resources));
  }
  return f;
}

ensemble::Matrix Featurizer::transform(const std::vector<corpus::CorpusRecord>& records, Resources& resources) const {
  const std::size_t d = dim();
  ensemble::Matrix X(records.size(), d);
  if (records.empty()) return X;

  std::vector<std::vector<double>> feats;
  if (uses_features(config_.representation)) feats = feature_block(records, resources);
  std::vector<DenseVector> embs;
  if (uses_embedding(config_)) embs = embedding_block(records, resources);

  for (std::size_t i = 0; i < records.size(); ++i) {
    std::vector<double> row;
    switch (config_.representation) {
      case Representation::features:
        row = std::move(feats[i]);
        break;
      case Representation::tfidf:
        row = vocabulary_->transform(records[i].title).values;
        break;
      case Representation::word_vectors:
      case Representation::remote_embedding:
        row = std::move(embs[i].values);
        break;
      case Representation::hybrid:
        row = representations::fuse(feats[i], embs[i], standardizer_ ? &*standardizer_ : nullptr).values;
        break;
    }
    if (row.size() != d)
      throw ShapeError("row " + std::to_string(i) + " has " + std::to_string(row.size()) + " columns, expected " +
                       std::to_string(d));
    std::copy(row.begin(), row.end(), X.data.begin() + static_cast<std::ptrdiff_t>(i * d));
  }
  return X;
}

std::vector<std::string> Featurizer::column_names() const {
  std::vector<std::string> names;
  if (uses_features(config_.representation)) {
    names = subset_.column_names();
    if (config_.include_baitness) names.emplace_back("baitness");
  }
  if (config_.representation == Representation::tfidf) {
    for (const auto& t : vocabulary_->terms()) names.push_back("tfidf:" + t);
  }
  if (uses_embedding(config_)) {
    const std::string prefix = embedding_is_remote(config_) ? "emb" : "wv";
    for (std::size_t k = 0; k < embedding_width_; ++k) names.push_back(prefix + std::to_string(k));
  }
  return names;
}

json Featurizer::to_json() const {
  json j{{"schema_version", 1}, {"config", config_.to_json()}, {"embedding_width", embedding_width_}};
  if (vocabulary_) j["vocabulary"] = vocabulary_->to_json();
  if (standardizer_) j["standardizer"] = standardizer_->to_json();
  return j;
}

Featurizer Featurizer::from_json(const json& j) {
  Featurizer f;
  try {
    f.config_ = FeaturizerConfig::from_json(j.at("config"));
    f.subset_ = informativeness::resolve_subset(f.config_.subset);
    f.embedding_width_ = j.at("embedding_width").get<std::size_t>();
    if (j.contains("vocabulary")) f.vocabulary_ = representations::VocabularyModel::from_json(j["vocabulary"]);
    if (j.contains("standardizer")) f.standardizer_ = representations::Standardizer::from_json(j["standardizer"]);
  } catch (const json::exception& e) {
    throw LoadError(std::string("malformed featurizer: ") + e.what());
  }
  if (f.config_.representation == Representation::tfidf && !f.vocabulary_)
    throw LoadError("tfidf featurizer lacks its vocabulary");
  return f;
}

std::vector<int> labels_of(const std::vector<corpus::CorpusRecord>& records) {
  std::vector<int> y;
  y.reserve(records.size());
  for (const auto& r : records) y.push_back(r.label);
  return y;
}

void ModelBundle::save(const std::filesystem::path& dir) const {
  std::filesystem::create_directories(dir);
  ensemble::save_model(model, dir / "model.json");
  std::ofstream out(dir / "featurizer.json", std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + (dir / "featurizer.json").string());
  out << featurizer.to_json().dump() << '\n';
}

ModelBundle ModelBundle::load(const std::filesystem::path& dir) {
  std::ifstream in(dir / "featurizer.json", std::ios::binary);
  if (!in) throw LoadError("cannot open " + (dir / "featurizer.json").string());
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw LoadError(std::string("featurizer.json: ") + e.what());
  }
  ModelBundle b{Featurizer::from_json(j), ensemble::load_model(dir / "model.json")};
  if (b.model.feature_schema != b.featurizer.column_names())
    throw CompatibilityError("model feature schema does not match its featurizer");
  return b;
}

}  // namespace clickbait::pipeline
