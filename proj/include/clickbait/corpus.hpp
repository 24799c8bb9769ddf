#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace clickbait::corpus {

enum class Source { kaggle1, kaggle2, cc17, other };

std::string_view to_string(Source source);
/// Throws SchemaError on an unknown tag.
Source parse_source(std::string_view tag);

struct CorpusRecord {
  std::string id;
  std::string title;
  std::optional<std::string> body;
  Source source = Source::other;
  /// The label as found in the input, before binarization.
  std::optional<double> raw_label;
  /// True when raw_label came from a graded score rather than a 0/1 flag.
  bool graded = false;
  int label = 0;

  bool operator==(const CorpusRecord&) const = default;
};

enum class Format { csv, jsonl };

/// Picks the format from the file extension (.csv, .jsonl, .json, .ndjson).
Format format_from_path(const std::filesystem::path& path);

/// Maps canonical fields onto source columns. Empty `title`/`label` means
/// "auto-detect from common column names".
struct SchemaMap {
  std::string title;
  /// Tried in order when `title` is missing or empty ("postText" for CC17).
  std::vector<std::string> title_fallbacks;
  std::optional<std::string> body;
  std::string label;
  std::optional<std::string> id;
  std::optional<Source> source;
  /// Labels kept in a separate JSONL file joined on `label_file_id`
  /// (the CC17 instances/truth layout).
  std::optional<std::filesystem::path> label_file;
  std::string label_file_id = "id";

  /// Reads `key = value` lines; keys: title, title_fallback (repeatable),
  /// body, label, id, source, label_file, label_file_id.
  static SchemaMap from_config(const std::filesystem::path& path);
  static SchemaMap cc17();
};

struct LoadResult {
  std::vector<CorpusRecord> records;
  std::size_t rows_read = 0;
  std::size_t dropped_empty_title = 0;
  std::size_t dropped_missing_label = 0;
};

/// Titles and bodies are NFC-normalized; casing is preserved.
LoadResult load_corpus(const std::filesystem::path& path, Format format, const SchemaMap& schema);

/// 1 iff raw >= threshold. Throws DomainError when raw is outside [0, 1].
int binarize_label(double raw, double threshold = 0.5);

/// Lowercased whitespace-token set Jaccard similarity.
double title_jaccard(std::string_view a, std::string_view b);

/// Removes exact duplicates (identical lowercased, whitespace-normalized
/// titles) always, and near duplicates (Jaccard > threshold against any
/// earlier survivor) when a threshold is given. First occurrence wins.
std::vector<CorpusRecord> deduplicate(const std::vector<CorpusRecord>& records,
                                      std::optional<double> jaccard_threshold = 0.9);

/// Keeps titles whose length in code points lies in [min_chars, max_chars].
std::vector<CorpusRecord> filter_length(const std::vector<CorpusRecord>& records, std::size_t min_chars = 11,
                                        std::size_t max_chars = 124);

using LanguagePredicate = std::function<bool(const CorpusRecord&)>;

LanguagePredicate accept_all_languages();
/// ASCII share of letters >= 0.9, and for titles of four or more words at
/// least one stopword hit in every ten tokens.
LanguagePredicate heuristic_english();

std::vector<CorpusRecord> filter_language(const std::vector<CorpusRecord>& records, const LanguagePredicate& keep);

/// Exactly `per_class` records per label drawn without replacement; survivors
/// keep their input order. Throws CapacityError naming a short class.
std::vector<CorpusRecord> balance(const std::vector<CorpusRecord>& records, std::size_t per_class = 20000,
                                  std::uint64_t seed = 42);

struct SplitRatios {
  double train = 0.8;
  double validation = 0.1;
  double test = 0.1;
};

struct SplitSet {
  std::vector<CorpusRecord> train;
  std::vector<CorpusRecord> validation;
  std::vector<CorpusRecord> test;
  std::uint64_t seed = 42;
};

/// Split sizes follow largest-remainder rounding of the corpus total; each
/// class's share of each split is within one record of its exact target.
SplitSet stratified_split(const std::vector<CorpusRecord>& records, SplitRatios ratios = {}, std::uint64_t seed = 42);

nlohmann::json to_json(const CorpusRecord& record);
CorpusRecord from_json(const nlohmann::json& j);

void write_jsonl(const std::vector<CorpusRecord>& records, const std::filesystem::path& path);
/// Reads the canonical JSONL written by write_jsonl.
std::vector<CorpusRecord> read_jsonl(const std::filesystem::path& path);

/// Writes train.jsonl, validation.jsonl, test.jsonl and split_meta.json.
void write_split(const SplitSet& split, const std::filesystem::path& dir, const nlohmann::json& filter_settings);

}  // namespace clickbait::corpus
