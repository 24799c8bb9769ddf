#include "clickbait/tfidf.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "clickbait/error.hpp"
#include "clickbait/hashing.hpp"
#include "clickbait/textstats.hpp"

namespace clickbait::representations {

using nlohmann::json;

std::vector<std::string> extract_terms(std::string_view text, const TfidfOptions& options) {
  const auto tok = textstats::tokenize(text);
  const auto& source = options.cleaned ? tok.tokens : tok.stream;
  std::vector<std::string> units;
  units.reserve(source.size());
  for (const auto& t : source) units.push_back(textstats::lookup_key(t));

  std::vector<std::string> terms;
  for (std::size_t n = options.ngram_min; n <= options.ngram_max; ++n) {
    if (n == 0 || units.size() < n) continue;
    for (std::size_t i = 0; i + n <= units.size(); ++i) {
      std::string term = units[i];
      for (std::size_t k = 1; k < n; ++k) term += ' ' + units[i + k];
      terms.push_back(std::move(term));
    }
  }
  return terms;
}

VocabularyModel VocabularyModel::fit(const std::vector<std::string>& corpus, const TfidfOptions& options) {
  if (corpus.empty()) throw FitError("fit_tfidf: empty corpus");
  if (options.ngram_min == 0 || options.ngram_min > options.ngram_max) throw FitError("fit_tfidf: bad ngram range");

  std::unordered_map<std::string, std::size_t> df;
  std::unordered_map<std::string, std::size_t> total;
  std::string fingerprint_input;
  for (const auto& doc : corpus) {
    fingerprint_input += doc;
    fingerprint_input.push_back('\x1e');
    std::unordered_set<std::string> seen;
    for (auto& term : extract_terms(doc, options)) {
      ++total[term];
      if (seen.insert(term).second) ++df[term];
    }
  }

  std::vector<std::string> kept;
  kept.reserve(df.size());
  for (const auto& [term, n] : df) kept.push_back(term);
  if (options.max_features > 0 && kept.size() > options.max_features) {
    std::sort(kept.begin(), kept.end(), [&](const std::string& a, const std::string& b) {
      const auto ta = total[a], tb = total[b];
      return ta != tb ? ta > tb : a < b;
    });
    kept.resize(options.max_features);
  }
  std::sort(kept.begin(), kept.end());

  VocabularyModel m;
  m.options_ = options;
  m.documents_ = corpus.size();
  m.fingerprint_ = sha256_hex(fingerprint_input);
  const double n_docs = static_cast<double>(corpus.size());
  for (std::size_t i = 0; i < kept.size(); ++i) {
    const double d = static_cast<double>(df[kept[i]]);
    m.terms_.emplace(kept[i], Entry{i, std::log((1.0 + n_docs) / (1.0 + d)) + 1.0});
  }
  return m;
}

std::optional<VocabularyModel::Entry> VocabularyModel::find(std::string_view term) const {
  auto it = terms_.find(term);
  if (it == terms_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> VocabularyModel::document_frequency(std::string_view term) const {
  auto e = find(term);
  if (!e) return std::nullopt;
  const double n = static_cast<double>(documents_);
  return static_cast<std::size_t>(std::llround((1.0 + n) / std::exp(e->idf - 1.0) - 1.0));
}

std::vector<std::string> VocabularyModel::terms() const {
  std::vector<std::string> out(terms_.size());
  for (const auto& [term, e] : terms_) out[e.index] = term;
  return out;
}

std::vector<std::pair<std::size_t, double>> VocabularyModel::transform_sparse(std::string_view text) const {
  std::map<std::size_t, double> weights;
  for (const auto& term : extract_terms(text, options_)) {
    auto it = terms_.find(term);
    if (it != terms_.end()) weights[it->second.index] += it->second.idf;
  }
  double sq = 0.0;
  for (const auto& [i, w] : weights) sq += w * w;
  const double norm = std::sqrt(sq);
  std::vector<std::pair<std::size_t, double>> out(weights.begin(), weights.end());
  if (norm > 0.0) {
    for (auto& [i, w] : out) w /= norm;
  }
  return out;
}

DenseVector VocabularyModel::transform(std::string_view text) const {
  DenseVector v;
  v.provenance = Provenance::tfidf;
  v.values.assign(terms_.size(), 0.0);
  const auto sparse = transform_sparse(text);
  for (const auto& [i, w] : sparse) v.values[i] = w;
  v.zero = sparse.empty();
  v.normalized = !v.zero;
  return v;
}

json VocabularyModel::to_json() const {
  json terms = json::object();
  for (const auto& [term, e] : terms_) terms[term] = json::array({e.index, e.idf});
  return {{"ngram_range", {options_.ngram_min, options_.ngram_max}},
          {"cleaned", options_.cleaned},
          {"max_features", options_.max_features},
          {"fingerprint", fingerprint_},
          {"documents", documents_},
          {"terms", std::move(terms)}};
}

VocabularyModel VocabularyModel::from_json(const json& j) {
  VocabularyModel m;
  try {
    m.options_.ngram_min = j.at("ngram_range").at(0).get<std::size_t>();
    m.options_.ngram_max = j.at("ngram_range").at(1).get<std::size_t>();
    m.options_.cleaned = j.at("cleaned").get<bool>();
    m.options_.max_features = j.value("max_features", std::size_t{0});
    m.fingerprint_ = j.at("fingerprint").get<std::string>();
    m.documents_ = j.at("documents").get<std::size_t>();
    std::vector<bool> used;
    for (auto it = j.at("terms").begin(); it != j.at("terms").end(); ++it) {
      Entry e{it.value().at(0).get<std::size_t>(), it.value().at(1).get<double>()};
      if (e.idf < 0.0) throw LoadError("vocabulary: negative idf for '" + it.key() + "'");
      m.terms_.emplace(it.key(), e);
    }
    used.assign(m.terms_.size(), false);
    for (const auto& [term, e] : m.terms_) {
      if (e.index >= used.size() || used[e.index]) throw LoadError("vocabulary: indices are not a contiguous range");
      used[e.index] = true;
    }
  } catch (const json::exception& e) {
    throw LoadError(std::string("vocabulary: malformed JSON: ") + e.what());
  }
  return m;
}

void VocabularyModel::save(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << to_json().dump() << '\n';
}

VocabularyModel VocabularyModel::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LoadError("cannot open " + path.string());
  try {
    return from_json(json::parse(in));
  } catch (const json::parse_error& e) {
    throw LoadError(std::string("vocabulary: ") + e.what());
  }
}

}  // namespace clickbait::representations
