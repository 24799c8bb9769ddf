#include "clickbait/vectors.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>

#include "clickbait/error.hpp"
#include "clickbait/textstats.hpp"

namespace clickbait::representations {

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::tfidf: return "tfidf";
    case Provenance::word_vectors: return "word_vectors";
    case Provenance::remote_embedding: return "remote_embedding";
    case Provenance::fused: return "fused";
  }
  return "fused";
}

double l2_norm(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

bool l2_normalize(std::span<double> v) {
  const double norm = l2_norm(v);
  if (norm == 0.0 || !std::isfinite(norm)) return false;
  for (double& x : v) x /= norm;
  return true;
}

DenseVector truncate_normalize(std::span<const double> v, std::size_t dim, Provenance provenance) {
  if (dim > v.size()) {
    throw ShapeError("cannot truncate a " + std::to_string(v.size()) + "-dim vector to " + std::to_string(dim));
  }
  DenseVector out;
  out.provenance = provenance;
  out.values.assign(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(dim));
  out.normalized = l2_normalize(out.values);
  out.zero = !out.normalized;
  return out;
}

std::optional<double> cosine(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw ShapeError("cosine: dimension mismatch " + std::to_string(a.size()) + " vs " + std::to_string(b.size()));
  }
  double dot = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) dot += a[i] * b[i];
  const double na = l2_norm(a), nb = l2_norm(b);
  if (na == 0.0 || nb == 0.0) return std::nullopt;
  return std::clamp(dot / (na * nb), -1.0, 1.0);
}

void WordVectorTable::add(std::string word, std::span<const double> values) {
  if (values.size() != dim_) {
    throw ShapeError("word vector for '" + word + "' has " + std::to_string(values.size()) + " components, expected " +
                     std::to_string(dim_));
  }
  if (index_.contains(word)) return;
  index_.emplace(std::move(word), data_.size() / std::max<std::size_t>(dim_, 1));
  data_.insert(data_.end(), values.begin(), values.end());
}

std::optional<std::span<const double>> WordVectorTable::find(std::string_view word) const {
  auto it = index_.find(std::string(word));
  if (it == index_.end()) return std::nullopt;
  return std::span<const double>(data_.data() + it->second * dim_, dim_);
}

WordVectorTable WordVectorTable::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LoadError("cannot open word-vector file " + path.string());

  auto split = [](const std::string& line) {
    std::vector<std::string_view> parts;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
      std::size_t j = i;
      while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
      if (j > i) parts.emplace_back(line.data() + i, j - i);
      i = j;
    }
    return parts;
  };
  auto parse_double = [&](std::string_view s, std::size_t line_no) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) {
      throw LoadError("word-vector file " + path.string() + ": bad number on line " + std::to_string(line_no));
    }
    return v;
  };

  std::string line;
  std::size_t line_no = 0;
  std::optional<WordVectorTable> table;
  std::optional<std::size_t> declared_count;
  std::vector<double> buf;
  while (std::getline(in, line)) {
    ++line_no;
    auto parts = split(line);
    if (parts.empty()) continue;
    if (line_no == 1 && parts.size() == 2) {
      std::size_t count = 0, dim = 0;
      auto r1 = std::from_chars(parts[0].data(), parts[0].data() + parts[0].size(), count);
      auto r2 = std::from_chars(parts[1].data(), parts[1].data() + parts[1].size(), dim);
      if (r1.ec == std::errc() && r2.ec == std::errc() && dim > 0) {
        declared_count = count;
        table.emplace(dim);
        continue;
      }
    }
    if (!table) table.emplace(parts.size() - 1);
    if (parts.size() - 1 != table->dim() || table->dim() == 0) {
      throw LoadError("word-vector file " + path.string() + ": line " + std::to_string(line_no) + " has " +
                      std::to_string(parts.size() - 1) + " components, expected " + std::to_string(table->dim()));
    }
    buf.clear();
    for (std::size_t k = 1; k < parts.size(); ++k) buf.push_back(parse_double(parts[k], line_no));
    table->add(std::string(parts[0]), buf);
  }
  if (!table) throw LoadError("word-vector file " + path.string() + " is empty");
  if (declared_count && *declared_count != table->size()) {
    throw LoadError("word-vector file " + path.string() + ": header declares " + std::to_string(*declared_count) +
                    " words, found " + std::to_string(table->size()));
  }
  return std::move(*table);
}

DenseVector mean_pool_word_vectors(std::string_view text, const WordVectorTable& table) {
  DenseVector out;
  out.provenance = Provenance::word_vectors;
  out.values.assign(table.dim(), 0.0);
  std::size_t hits = 0;
  for (const auto& token : textstats::tokenize(text).tokens) {
    auto v = table.find(textstats::lookup_key(token));
    if (!v) continue;
    for (std::size_t i = 0; i < v->size(); ++i) out.values[i] += (*v)[i];
    ++hits;
  }
  if (hits > 0) {
    for (double& x : out.values) x /= static_cast<double>(hits);
  }
  out.zero = l2_norm(out.values) == 0.0;
  return out;
}

}  // namespace clickbait::representations
