#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace clickbait::textstats {

/// Half-open range [begin, end) into TokenizedText::tokens.
struct SentenceSpan {
  std::size_t begin = 0;
  std::size_t end = 0;

  bool operator==(const SentenceSpan&) const = default;
};

struct TokenizedText {
  std::string original;
  /// Word tokens: maximal runs of letters, digits and inner apostrophes.
  /// Digit groups joined by ',' or '.' ("1,000", "3.5") stay one token.
  std::vector<std::string> tokens;
  /// Every non-space character outside a word token, one entry per character.
  std::vector<std::string> punctuation;
  /// Words and punctuation interleaved in reading order.
  std::vector<std::string> stream;
  std::vector<SentenceSpan> sentences;
  std::size_t char_count = 0;
  /// Letters and digits inside word tokens.
  std::size_t alnum_char_count = 0;

  std::size_t word_count() const noexcept { return tokens.size(); }
  std::size_t sentence_count() const noexcept { return sentences.size(); }
};

TokenizedText tokenize(std::string_view text);

/// Lowercases and folds the typographic apostrophe to '\''; the key used for
/// every lexicon lookup.
std::string lookup_key(std::string_view token);

/// Vowel-group syllable heuristic. Throws DomainError if `word` has no letter.
int count_syllables(std::string_view word);

struct SentimentEntry {
  double polarity = 0.0;
  double subjectivity = 0.0;
};

/// Closed word classes and the polarity lexicon used by the measures.
/// Entries are stored lowercase; see LexiconSet::validate.
struct LexiconSet {
  std::unordered_set<std::string> stopwords;
  std::unordered_set<std::string> pronouns;
  std::unordered_set<std::string> second_person_pronouns;
  std::unordered_set<std::string> speculatives;
  /// Single words or whitespace-separated phrases.
  std::vector<std::string> bait_phrases;
  std::unordered_set<std::string> irregular_superlatives;
  std::unordered_set<std::string> superlative_suffix_exceptions;
  std::unordered_map<std::string, SentimentEntry> polarity_lexicon;

  /// The lexicons compiled into the library.
  static const LexiconSet& defaults();

  /// Starts from the defaults and replaces every list whose file exists in
  /// `dir` (stopwords.txt, pronouns.txt, ..., sentiment.tsv).
  static LexiconSet from_directory(const std::filesystem::path& dir);

  /// Throws LoadError when an invariant is violated.
  void validate() const;
};

/// One entry per line; blank lines and '#' comments skipped; entries are
/// lowercased and deduplicated preserving first occurrence.
std::vector<std::string> parse_word_list(std::string_view content);
std::unordered_map<std::string, SentimentEntry> parse_sentiment_lexicon(std::string_view content);

std::vector<std::string> load_word_list(const std::filesystem::path& path);
std::unordered_map<std::string, SentimentEntry> load_sentiment_lexicon(const std::filesystem::path& path);

bool is_superlative(std::string_view token, const LexiconSet& lexicons);

}  // namespace clickbait::textstats
