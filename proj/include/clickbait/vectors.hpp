#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace clickbait::representations {

enum class Provenance { tfidf, word_vectors, remote_embedding, fused };

std::string_view to_string(Provenance p);

struct DenseVector {
  std::vector<double> values;
  Provenance provenance = Provenance::fused;
  /// Scaled to unit L2 norm (unless `zero`).
  bool normalized = false;
  /// All components are zero (OOV text, cancelling vectors, empty input).
  bool zero = false;

  std::size_t dim() const noexcept { return values.size(); }
};

double l2_norm(std::span<const double> v);

/// Scales in place to unit norm; returns false (and leaves v) on a zero vector.
bool l2_normalize(std::span<double> v);

/// Keeps the first `dim` components, then L2-normalizes.
DenseVector truncate_normalize(std::span<const double> v, std::size_t dim, Provenance provenance);

/// Cosine similarity. Throws ShapeError on a dimension mismatch; nullopt when
/// either vector has zero norm.
std::optional<double> cosine(std::span<const double> a, std::span<const double> b);

/// Pre-trained word vectors in the text format "word v1 ... vd", one word per
/// line, optionally preceded by a "count dim" header line.
class WordVectorTable {
 public:
  explicit WordVectorTable(std::size_t dim) : dim_(dim) {}

  /// Throws LoadError on inconsistent dimensions or unparseable numbers.
  static WordVectorTable load(const std::filesystem::path& path);

  /// Later duplicates of a word are ignored, matching the first-wins loaders.
  void add(std::string word, std::span<const double> values);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return index_.size(); }

  /// Exact-key lookup.
  std::optional<std::span<const double>> find(std::string_view word) const;

 private:
  std::size_t dim_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<double> data_;
};

/// Mean of the vectors of in-vocabulary lowercased word tokens.
DenseVector mean_pool_word_vectors(std::string_view text, const WordVectorTable& table);

}  // namespace clickbait::representations
