#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "clickbait/vectors.hpp"

namespace clickbait::representations {

struct TfidfOptions {
  std::size_t ngram_min = 1;
  std::size_t ngram_max = 2;
  /// cleaned: lowercase and drop punctuation tokens; raw: lowercase only.
  bool cleaned = false;
  /// Keep only the most frequent terms (by corpus term count); 0 keeps all.
  std::size_t max_features = 0;
};

/// Lowercased word (and, for the raw variant, punctuation) n-grams of `text`,
/// joined with single spaces, in order of occurrence.
std::vector<std::string> extract_terms(std::string_view text, const TfidfOptions& options);

class VocabularyModel {
 public:
  struct Entry {
    std::size_t index = 0;
    double idf = 0.0;
  };

  /// idf = ln((1 + N) / (1 + df)) + 1. Indices follow lexicographic term
  /// order. Throws FitError on an empty corpus.
  static VocabularyModel fit(const std::vector<std::string>& corpus, const TfidfOptions& options = {});

  std::size_t size() const noexcept { return terms_.size(); }
  const TfidfOptions& options() const noexcept { return options_; }
  const std::string& fingerprint() const noexcept { return fingerprint_; }
  std::size_t document_count() const noexcept { return documents_; }

  std::optional<Entry> find(std::string_view term) const;
  /// Number of training documents containing `term`, recovered from its idf.
  std::optional<std::size_t> document_frequency(std::string_view term) const;
  /// Terms ordered by index.
  std::vector<std::string> terms() const;

  /// tf * idf per vocabulary entry, L2-normalized when non-zero.
  DenseVector transform(std::string_view text) const;
  /// Same weights as `transform`, as (index, value) pairs sorted by index.
  std::vector<std::pair<std::size_t, double>> transform_sparse(std::string_view text) const;

  /// {"ngram_range": [1, 2], "cleaned": bool, "fingerprint": str,
  ///  "documents": N, "terms": {term: [index, idf]}}
  nlohmann::json to_json() const;
  static VocabularyModel from_json(const nlohmann::json& j);

  void save(const std::filesystem::path& path) const;
  static VocabularyModel load(const std::filesystem::path& path);

 private:
  TfidfOptions options_;
  std::map<std::string, Entry, std::less<>> terms_;
  std::string fingerprint_;
  std::size_t documents_ = 0;
};

}  // namespace clickbait::representations
