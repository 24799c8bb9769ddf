#include "clickbait/informativeness.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <unordered_map>

#include "clickbait/error.hpp"
#include "clickbait/unicode.hpp"

namespace clickbait::informativeness {

using textstats::TokenizedText;

namespace {

constexpr std::u32string_view kBaitPunct = U"!\"(?#";
constexpr std::u32string_view kNonBaitPunct = U"$%&,.;:-/";

bool is_word_char(char32_t cp) {
  return unicode::is_letter(cp) || unicode::is_digit(cp) || unicode::is_apostrophe(cp);
}

bool has_letter(std::string_view token) {
  for (char32_t cp : unicode::decode(token)) {
    if (unicode::is_letter(cp)) return true;
  }
  return false;
}

double ratio(double num, double den) { return den > 0 ? num / den : 0.0; }

}  // namespace

const std::array<std::string_view, kMeasureCount>& FeatureVector::names() {
  static constexpr std::array<std::string_view, kMeasureCount> kNames = {
      "char_count",        "word_count",
      "mean_word_length",  "common_words_ratio",
      "capital_letters_ratio", "capital_words_count",
      "punctuation_ratio", "bait_punct_count",
      "nonbait_punct_count", "numbers_count",
      "pronouns_count",    "second_person_pronouns_count",
      "superlatives_ratio", "speculatives_count",
      "bait_phrases_count", "similarity_score",
      "polarity",          "subjectivity",
      "ttr",               "cttr",
      "maas_index",        "hdd",
      "fres",              "fkgl",
      "ari"};
  return kNames;
}

std::array<double, kMeasureCount> FeatureVector::values() const {
  return {char_count,         word_count,         mean_word_length,   common_words_ratio,
          capital_letters_ratio, capital_words_count, punctuation_ratio, bait_punct_count,
          nonbait_punct_count, numbers_count,     pronouns_count,     second_person_pronouns_count,
          superlatives_ratio, speculatives_count, bait_phrases_count, similarity_score,
          polarity,           subjectivity,       ttr,                cttr,
          maas_index,         hdd,                fres,               fkgl,
          ari};
}

FeatureVector FeatureVector::from_values(const std::array<double, kMeasureCount>& v, bool similarity_available) {
  FeatureVector f;
  f.char_count = v[0];
  f.word_count = v[1];
  f.mean_word_length = v[2];
  f.common_words_ratio = v[3];
  f.capital_letters_ratio = v[4];
  f.capital_words_count = v[5];
  f.punctuation_ratio = v[6];
  f.bait_punct_count = v[7];
  f.nonbait_punct_count = v[8];
  f.numbers_count = v[9];
  f.pronouns_count = v[10];
  f.second_person_pronouns_count = v[11];
  f.superlatives_ratio = v[12];
  f.speculatives_count = v[13];
  f.bait_phrases_count = v[14];
  f.similarity_score = v[15];
  f.polarity = v[16];
  f.subjectivity = v[17];
  f.ttr = v[18];
  f.cttr = v[19];
  f.maas_index = v[20];
  f.hdd = v[21];
  f.fres = v[22];
  f.fkgl = v[23];
  f.ari = v[24];
  f.similarity_available = similarity_available;
  return f;
}

std::size_t measure_index(std::string_view name) {
  const auto& names = FeatureVector::names();
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) throw SchemaError("unknown measure '" + std::string(name) + "'");
  return static_cast<std::size_t>(it - names.begin());
}

SurfaceMeasures surface_measures(const TokenizedText& text) {
  SurfaceMeasures m;
  m.char_count = static_cast<double>(text.char_count);
  m.word_count = static_cast<double>(text.word_count());
  std::size_t total_length = 0;
  for (const auto& token : text.tokens) {
    const auto cps = unicode::decode(token);
    total_length += cps.size();
    std::size_t letters = 0;
    bool any_lower = false;
    for (char32_t cp : cps) {
      if (!unicode::is_letter(cp)) continue;
      ++letters;
      any_lower = any_lower || !unicode::is_upper(cp);
    }
    if (cps.size() >= 2 && letters > 0 && !any_lower) m.capital_words_count += 1;
  }
  m.mean_word_length = ratio(static_cast<double>(total_length), m.word_count);
  std::size_t upper = 0;
  for (char32_t cp : unicode::decode(text.original)) upper += unicode::is_upper(cp) ? 1 : 0;
  m.capital_letters_ratio = ratio(static_cast<double>(upper), m.char_count);
  return m;
}

std::size_t count_phrase(std::string_view normalized_text, std::string_view phrase) {
  const std::u32string text = unicode::decode(normalized_text);
  const std::u32string pat = unicode::decode(phrase);
  if (pat.empty() || pat.size() > text.size()) return 0;
  std::size_t count = 0;
  std::size_t pos = 0;
  while ((pos = text.find(pat, pos)) != std::u32string::npos) {
    const bool left_ok = pos == 0 || !is_word_char(text[pos - 1]) || !is_word_char(pat.front());
    const std::size_t end = pos + pat.size();
    const bool right_ok = end == text.size() || !is_word_char(text[end]) || !is_word_char(pat.back());
    if (left_ok && right_ok) {
      ++count;
      pos = end;
    } else {
      ++pos;
    }
  }
  return count;
}

LexiconMeasures lexicon_measures(const TokenizedText& text, const textstats::LexiconSet& lex) {
  LexiconMeasures m;
  const double n = static_cast<double>(text.word_count());
  double stop = 0, superl = 0;
  for (const auto& token : text.tokens) {
    const std::string key = textstats::lookup_key(token);
    if (lex.stopwords.contains(key)) stop += 1;
    if (lex.pronouns.contains(key)) m.pronouns_count += 1;
    if (lex.second_person_pronouns.contains(key)) m.second_person_pronouns_count += 1;
    if (lex.speculatives.contains(key)) m.speculatives_count += 1;
    if (textstats::is_superlative(token, lex)) superl += 1;
  }
  m.common_words_ratio = ratio(stop, n);
  m.superlatives_ratio = ratio(superl, n);
  if (!text.tokens.empty()) {
    const std::string normalized = unicode::collapse_whitespace(textstats::lookup_key(text.original));
    for (const auto& phrase : lex.bait_phrases) m.bait_phrases_count += static_cast<double>(count_phrase(normalized, phrase));
  }
  return m;
}

bool is_number_token(std::string_view token) {
  std::u32string cps;
  for (char32_t cp : unicode::decode(token)) {
    if (cp != U',') cps.push_back(cp);
  }
  if (cps.empty()) return false;
  bool seen_dot = false;
  for (std::size_t i = 0; i < cps.size(); ++i) {
    const char32_t cp = cps[i];
    if (unicode::is_digit(cp)) continue;
    if (cp == U'.' && !seen_dot && i > 0 && i + 1 < cps.size()) {
      seen_dot = true;
      continue;
    }
    return false;
  }
  return true;
}

PunctuationMeasures punctuation_measures(const TokenizedText& text) {
  PunctuationMeasures m;
  for (const auto& p : text.punctuation) {
    const char32_t cp = unicode::decode(p).front();
    if (kBaitPunct.find(cp) != std::u32string_view::npos) m.bait_punct_count += 1;
    if (kNonBaitPunct.find(cp) != std::u32string_view::npos) m.nonbait_punct_count += 1;
  }
  m.punctuation_ratio = ratio(static_cast<double>(text.punctuation.size()), static_cast<double>(text.char_count));
  for (const auto& token : text.tokens) m.numbers_count += is_number_token(token) ? 1 : 0;
  return m;
}

DiversityMeasures lexical_diversity(const TokenizedText& text) {
  DiversityMeasures m;
  const std::size_t n = text.word_count();
  std::unordered_map<std::string, std::size_t> freq;
  for (const auto& token : text.tokens) ++freq[textstats::lookup_key(token)];
  const std::size_t t = freq.size();
  const double nd = static_cast<double>(n), td = static_cast<double>(t);

  m.ttr = ratio(td, nd);
  m.cttr = n > 0 ? td / std::sqrt(2.0 * nd) : 0.0;
  if (n <= 1) {
    m.maas_degenerate = true;
  } else {
    const double ln_n = std::log(nd);
    m.maas_index = (ln_n - std::log(td)) / (ln_n * ln_n);
  }

  if (n < kHddSampleSize) {
    m.hdd = m.ttr;
    m.hdd_fallback = true;
    return m;
  }
  // Each type contributes P(it appears in a 42-token draw without
  // replacement) / 42; P(absent) = C(n - f, 42) / C(n, 42).
  double sum = 0.0;
  for (const auto& [word, f] : freq) {
    double p_absent = 0.0;
    if (n - f >= kHddSampleSize) {
      p_absent = 1.0;
      for (std::size_t i = 0; i < kHddSampleSize; ++i) {
        p_absent *= static_cast<double>(n - f - i) / static_cast<double>(n - i);
      }
    }
    sum += 1.0 - p_absent;
  }
  m.hdd = std::clamp(sum / static_cast<double>(kHddSampleSize), 0.0, 1.0);
  return m;
}

ReadabilityScores readability(const TokenizedText& text) {
  ReadabilityScores r;
  const double words = static_cast<double>(text.word_count());
  const double sentences = static_cast<double>(text.sentence_count());
  if (words == 0 || sentences == 0) {
    r.degenerate = true;
    return r;
  }
  double syllables = 0;
  for (const auto& token : text.tokens) syllables += has_letter(token) ? textstats::count_syllables(token) : 1;
  const double chars = static_cast<double>(text.alnum_char_count);
  const double wps = words / sentences;
  const double spw = syllables / words;
  r.fres = 206.835 - 1.015 * wps - 84.6 * spw;
  r.fkgl = 0.39 * wps + 11.8 * spw - 15.59;
  r.ari = 4.71 * (chars / words) + 0.5 * wps - 21.43;
  return r;
}

SentimentScores sentiment(const TokenizedText& text, const textstats::LexiconSet& lex) {
  SentimentScores s;
  double pol = 0, subj = 0;
  std::size_t hits = 0;
  for (const auto& token : text.tokens) {
    auto it = lex.polarity_lexicon.find(textstats::lookup_key(token));
    if (it == lex.polarity_lexicon.end()) continue;
    pol += it->second.polarity;
    subj += it->second.subjectivity;
    ++hits;
  }
  if (hits == 0) return s;
  s.polarity = std::clamp(pol / static_cast<double>(hits), -1.0, 1.0);
  s.subjectivity = std::clamp(subj / static_cast<double>(hits), 0.0, 1.0);
  return s;
}

SimilarityResult similarity(const representations::DenseVector& title_vec, const representations::DenseVector& body_vec) {
  auto c = representations::cosine(title_vec.values, body_vec.values);
  if (!c) return {};
  return {*c, true};
}

FeatureVector extract_features(std::string_view title, const textstats::LexiconSet& lex) {
  corpus::CorpusRecord r;
  r.title = std::string(title);
  return extract_features(r, lex, nullptr);
}

FeatureVector extract_features(const corpus::CorpusRecord& record, const textstats::LexiconSet& lex,
                               const representations::WordVectorTable* word_vectors) {
  if (unicode::trim(record.title).empty()) throw DomainError("extract_features: empty title");
  const TokenizedText text = textstats::tokenize(record.title);
  FeatureVector f;

  const auto surface = surface_measures(text);
  f.char_count = surface.char_count;
  f.word_count = surface.word_count;
  f.mean_word_length = surface.mean_word_length;
  f.capital_letters_ratio = surface.capital_letters_ratio;
  f.capital_words_count = surface.capital_words_count;

  const auto lexicon = lexicon_measures(text, lex);
  f.common_words_ratio = lexicon.common_words_ratio;
  f.pronouns_count = lexicon.pronouns_count;
  f.second_person_pronouns_count = lexicon.second_person_pronouns_count;
  f.superlatives_ratio = lexicon.superlatives_ratio;
  f.speculatives_count = lexicon.speculatives_count;
  f.bait_phrases_count = lexicon.bait_phrases_count;

  const auto punct = punctuation_measures(text);
  f.punctuation_ratio = punct.punctuation_ratio;
  f.bait_punct_count = punct.bait_punct_count;
  f.nonbait_punct_count = punct.nonbait_punct_count;
  f.numbers_count = punct.numbers_count;

  if (record.body && word_vectors) {
    const auto sim = similarity(representations::mean_pool_word_vectors(record.title, *word_vectors),
                                representations::mean_pool_word_vectors(*record.body, *word_vectors));
    f.similarity_score = sim.score;
    f.similarity_available = sim.available;
  }

  const auto senti = sentiment(text, lex);
  f.polarity = senti.polarity;
  f.subjectivity = senti.subjectivity;

  const auto div = lexical_diversity(text);
  f.ttr = div.ttr;
  f.cttr = div.cttr;
  f.maas_index = div.maas_index;
  f.hdd = div.hdd;

  const auto read = readability(text);
  f.fres = read.fres;
  f.fkgl = read.fkgl;
  f.ari = read.ari;
  return f;
}

std::vector<std::string> FeatureSubset::column_names() const {
  std::vector<std::string> out;
  for (std::size_t i : indices) out.emplace_back(FeatureVector::names()[i]);
  return out;
}

std::vector<double> FeatureSubset::select(const FeatureVector& f) const {
  const auto all = f.values();
  std::vector<double> out;
  out.reserve(indices.size());
  for (std::size_t i : indices) out.push_back(all[i]);
  return out;
}

const FeatureSubset& default_subset() {
  static const FeatureSubset subset{"default15", {0, 1, 3, 4, 7, 8, 9, 11, 12, 13, 14, 16, 17, 18, 22}};
  return subset;
}

const FeatureSubset& all_measures_subset() {
  static const FeatureSubset subset = [] {
    FeatureSubset s{"all25", {}};
    for (std::size_t i = 0; i < kMeasureCount; ++i) s.indices.push_back(i);
    return s;
  }();
  return subset;
}

FeatureSubset resolve_subset(std::string_view spec) {
  if (spec == "default15" || spec.empty()) return default_subset();
  if (spec == "all25") return all_measures_subset();
  FeatureSubset s{std::string(spec), {}};
  std::stringstream ss{std::string(spec)};
  std::string name;
  while (std::getline(ss, name, ',')) {
    const std::size_t idx = measure_index(unicode::trim(name));
    if (std::find(s.indices.begin(), s.indices.end(), idx) != s.indices.end()) {
      throw SchemaError("measure '" + name + "' listed twice in subset");
    }
    s.indices.push_back(idx);
  }
  if (s.indices.empty()) throw SchemaError("empty feature subset");
  return s;
}

}  // namespace clickbait::informativeness
