#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "clickbait/corpus.hpp"
#include "clickbait/textstats.hpp"
#include "clickbait/vectors.hpp"

namespace clickbait::informativeness {

inline constexpr std::size_t kMeasureCount = 25;

/// The 25 informativeness measures of a headline, in canonical order.
struct FeatureVector {
  double char_count = 0;
  double word_count = 0;
  double mean_word_length = 0;
  double common_words_ratio = 0;
  double capital_letters_ratio = 0;
  double capital_words_count = 0;
  double punctuation_ratio = 0;
  double bait_punct_count = 0;
  double nonbait_punct_count = 0;
  double numbers_count = 0;
  double pronouns_count = 0;
  double second_person_pronouns_count = 0;
  double superlatives_ratio = 0;
  double speculatives_count = 0;
  double bait_phrases_count = 0;
  double similarity_score = 0;
  double polarity = 0;
  double subjectivity = 0;
  double ttr = 0;
  double cttr = 0;
  double maas_index = 0;
  double hdd = 0;
  double fres = 0;
  double fkgl = 0;
  double ari = 0;
  bool similarity_available = false;

  static const std::array<std::string_view, kMeasureCount>& names();

  std::array<double, kMeasureCount> values() const;
  static FeatureVector from_values(const std::array<double, kMeasureCount>& values, bool similarity_available);

  bool operator==(const FeatureVector&) const = default;
};

/// Position of a measure name in canonical order; throws SchemaError.
std::size_t measure_index(std::string_view name);

struct SurfaceMeasures {
  double char_count = 0;
  double word_count = 0;
  double mean_word_length = 0;
  double capital_letters_ratio = 0;
  double capital_words_count = 0;
};

struct LexiconMeasures {
  double common_words_ratio = 0;
  double pronouns_count = 0;
  double second_person_pronouns_count = 0;
  double speculatives_count = 0;
  double bait_phrases_count = 0;
  double superlatives_ratio = 0;
};

struct PunctuationMeasures {
  double punctuation_ratio = 0;
  double bait_punct_count = 0;
  double nonbait_punct_count = 0;
  double numbers_count = 0;
};

struct DiversityMeasures {
  double ttr = 0;
  double cttr = 0;
  double maas_index = 0;
  double hdd = 0;
  /// n <= 1 (Maas undefined) or n < 42 (HD-D fell back to TTR).
  bool maas_degenerate = false;
  bool hdd_fallback = false;
};

struct ReadabilityScores {
  double fres = 0;
  double fkgl = 0;
  double ari = 0;
  /// No words or no sentences; all scores are zero.
  bool degenerate = false;
};

struct SentimentScores {
  double polarity = 0;
  double subjectivity = 0;
};

struct SimilarityResult {
  double score = 0;
  bool available = false;
};

inline constexpr std::size_t kHddSampleSize = 42;

SurfaceMeasures surface_measures(const textstats::TokenizedText& text);
LexiconMeasures lexicon_measures(const textstats::TokenizedText& text, const textstats::LexiconSet& lex);
PunctuationMeasures punctuation_measures(const textstats::TokenizedText& text);
DiversityMeasures lexical_diversity(const textstats::TokenizedText& text);
ReadabilityScores readability(const textstats::TokenizedText& text);
SentimentScores sentiment(const textstats::TokenizedText& text, const textstats::LexiconSet& lex);

/// Cosine of two text vectors. A zero vector on either side yields
/// {0, available = false}; differing dimensions throw ShapeError.
SimilarityResult similarity(const representations::DenseVector& title_vec, const representations::DenseVector& body_vec);

/// Non-overlapping occurrences of `phrase` in lowercased, whitespace-collapsed
/// text, anchored at word boundaries.
std::size_t count_phrase(std::string_view normalized_text, std::string_view phrase);

/// True for tokens that parse as an integer or decimal once commas are removed.
bool is_number_token(std::string_view token);

/// Word vectors are optional; without them (or without a body) the
/// similarity measure is 0 and marked unavailable.
FeatureVector extract_features(const corpus::CorpusRecord& record, const textstats::LexiconSet& lex,
                               const representations::WordVectorTable* word_vectors = nullptr);

FeatureVector extract_features(std::string_view title, const textstats::LexiconSet& lex);

/// Named selections of measures fed to the classifiers.
struct FeatureSubset {
  std::string name;
  std::vector<std::size_t> indices;

  std::vector<std::string> column_names() const;
  std::vector<double> select(const FeatureVector& f) const;
};

/// 15 measures: character and word count, common-words and capital-letters
/// ratios, bait/non-bait punctuation, numbers, second-person pronouns,
/// superlatives, speculatives, bait phrases, polarity, subjectivity, TTR, FRES.
const FeatureSubset& default_subset();
const FeatureSubset& all_measures_subset();

/// "default15" or "all25", or a comma-separated list of measure names.
FeatureSubset resolve_subset(std::string_view spec);

}  // namespace clickbait::informativeness
