#include <fstream>
#include <sstream>
#include <string>

#include "clickbait/error.hpp"
#include "clickbait/textstats.hpp"
#include "clickbait/unicode.hpp"

namespace clickbait::textstats {

namespace embedded {
extern const std::string_view stopwords;
extern const std::string_view pronouns;
extern const std::string_view second_person_pronouns;
extern const std::string_view speculatives;
extern const std::string_view bait_phrases;
extern const std::string_view irregular_superlatives;
extern const std::string_view superlative_suffix_exceptions;
extern const std::string_view sentiment;
}  // namespace embedded

namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LoadError("cannot open lexicon file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

template <typename F>
void for_each_entry(std::string_view content, F&& fn) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= content.size()) {
    std::size_t end = content.find('\n', pos);
    if (end == std::string_view::npos) end = content.size();
    ++line_no;
    std::string line = unicode::trim(content.substr(pos, end - pos));
    if (!line.empty() && line[0] != '#') fn(line, line_no);
    pos = end + 1;
  }
}

std::unordered_set<std::string> to_set(const std::vector<std::string>& v) { return {v.begin(), v.end()}; }

}  // namespace

std::vector<std::string> parse_word_list(std::string_view content) {
  std::vector<std::string> out;
  std::unordered_set<std::string> seen;
  for_each_entry(content, [&](const std::string& line, std::size_t) {
    std::string entry = unicode::collapse_whitespace(lookup_key(line));
    if (seen.insert(entry).second) out.push_back(std::move(entry));
  });
  return out;
}

std::unordered_map<std::string, SentimentEntry> parse_sentiment_lexicon(std::string_view content) {
  std::unordered_map<std::string, SentimentEntry> out;
  for_each_entry(content, [&](const std::string& line, std::size_t line_no) {
    std::istringstream fields(line);
    std::string word;
    SentimentEntry e;
    if (!(fields >> word >> e.polarity >> e.subjectivity)) {
      throw LoadError("sentiment lexicon: malformed entry on line " + std::to_string(line_no));
    }
    if (e.polarity < -1.0 || e.polarity > 1.0 || e.subjectivity < 0.0 || e.subjectivity > 1.0) {
      throw LoadError("sentiment lexicon: value out of range on line " + std::to_string(line_no));
    }
    out.try_emplace(lookup_key(word), e);
  });
  return out;
}

std::vector<std::string> load_word_list(const std::filesystem::path& path) { return parse_word_list(read_file(path)); }

std::unordered_map<std::string, SentimentEntry> load_sentiment_lexicon(const std::filesystem::path& path) {
  return parse_sentiment_lexicon(read_file(path));
}

const LexiconSet& LexiconSet::defaults() {
  static const LexiconSet set = [] {
    LexiconSet s;
    s.stopwords = to_set(parse_word_list(embedded::stopwords));
    s.pronouns = to_set(parse_word_list(embedded::pronouns));
    s.second_person_pronouns = to_set(parse_word_list(embedded::second_person_pronouns));
    s.speculatives = to_set(parse_word_list(embedded::speculatives));
    s.bait_phrases = parse_word_list(embedded::bait_phrases);
    s.irregular_superlatives = to_set(parse_word_list(embedded::irregular_superlatives));
    s.superlative_suffix_exceptions = to_set(parse_word_list(embedded::superlative_suffix_exceptions));
    s.polarity_lexicon = parse_sentiment_lexicon(embedded::sentiment);
    s.validate();
    return s;
  }();
  return set;
}

LexiconSet LexiconSet::from_directory(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) throw LoadError("lexicon directory not found: " + dir.string());
  LexiconSet s = defaults();
  auto override_set = [&](const char* file, std::unordered_set<std::string>& target) {
    const auto p = dir / file;
    if (std::filesystem::exists(p)) target = to_set(load_word_list(p));
  };
  override_set("stopwords.txt", s.stopwords);
  override_set("pronouns.txt", s.pronouns);
  override_set("second_person_pronouns.txt", s.second_person_pronouns);
  override_set("speculatives.txt", s.speculatives);
  override_set("irregular_superlatives.txt", s.irregular_superlatives);
  override_set("superlative_suffix_exceptions.txt", s.superlative_suffix_exceptions);
  if (std::filesystem::exists(dir / "bait_phrases.txt")) s.bait_phrases = load_word_list(dir / "bait_phrases.txt");
  if (std::filesystem::exists(dir / "sentiment.tsv")) s.polarity_lexicon = load_sentiment_lexicon(dir / "sentiment.tsv");
  s.validate();
  return s;
}

void LexiconSet::validate() const {
  for (const auto& p : second_person_pronouns) {
    if (!pronouns.contains(p)) throw LoadError("second-person pronoun '" + p + "' missing from pronoun list");
  }
  auto check_lower = [](const std::string& w, const char* list) {
    if (w.empty() || lookup_key(w) != w) throw LoadError(std::string(list) + ": entry '" + w + "' is not lowercase");
  };
  for (const auto* set : {&stopwords, &pronouns, &second_person_pronouns, &speculatives, &irregular_superlatives,
                          &superlative_suffix_exceptions}) {
    for (const auto& w : *set) check_lower(w, "word list");
  }
  std::unordered_set<std::string> seen;
  for (const auto& w : bait_phrases) {
    check_lower(w, "bait phrases");
    if (!seen.insert(w).second) throw LoadError("bait phrases: duplicate entry '" + w + "'");
  }
  for (const auto& [w, e] : polarity_lexicon) check_lower(w, "sentiment lexicon");
}

}  // namespace clickbait::textstats
