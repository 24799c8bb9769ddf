#include "clickbait/corpus.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "clickbait/csv.hpp"
#include "clickbait/error.hpp"
#include "clickbait/rng.hpp"
#include "clickbait/textstats.hpp"
#include "clickbait/unicode.hpp"

namespace clickbait::corpus {

using nlohmann::json;

namespace {

constexpr std::array kTitleAliases = {"title", "headline", "targetTitle", "postText", "text"};
constexpr std::array kLabelAliases = {"label", "clickbait", "truthMedian", "truthClass", "class", "is_clickbait"};

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct ParsedLabel {
  double raw = 0.0;
  bool graded = false;
  int label = 0;
};

ParsedLabel label_from_number(double v, bool integral) {
  if (integral) {
    if (v != 0.0 && v != 1.0) throw std::invalid_argument("binary label must be 0 or 1");
    return {v, false, static_cast<int>(v)};
  }
  if (!(v >= 0.0 && v <= 1.0)) throw std::invalid_argument("graded label outside [0, 1]");
  return {v, true, binarize_label(v)};
}

// nullopt means "no label present".
std::optional<ParsedLabel> parse_label(const json& v) {
  if (v.is_null()) return std::nullopt;
  if (v.is_boolean()) return ParsedLabel{v.get<bool>() ? 1.0 : 0.0, false, v.get<bool>() ? 1 : 0};
  if (v.is_number_integer() || v.is_number_unsigned()) return label_from_number(v.get<double>(), true);
  if (v.is_number_float()) return label_from_number(v.get<double>(), false);
  if (v.is_string()) {
    std::string s = unicode::to_lower(unicode::trim(v.get<std::string>()));
    if (s.empty()) return std::nullopt;
    if (s == "true" || s == "yes") return ParsedLabel{1.0, false, 1};
    if (s == "false" || s == "no") return ParsedLabel{0.0, false, 0};
    std::size_t used = 0;
    double d = 0.0;
    try {
      d = std::stod(s, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("unparseable label '" + s + "'");
    }
    if (used != s.size()) throw std::invalid_argument("unparseable label '" + s + "'");
    const bool integral = s.find_first_of(".eE") == std::string::npos;
    return label_from_number(d, integral);
  }
  throw std::invalid_argument("unsupported label type");
}

std::string text_value(const json& v, bool join_arrays) {
  if (v.is_null()) return {};
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string out;
    for (const auto& e : v) {
      if (!e.is_string()) continue;
      if (!join_arrays) return e.get<std::string>();
      if (!out.empty()) out.push_back(' ');
      out += e.get<std::string>();
    }
    return out;
  }
  return v.dump();
}

// Row abstraction shared by CSV and JSONL ingestion.
struct RawRow {
  std::unordered_map<std::string, json> fields;
  std::size_t line = 0;
};

std::vector<RawRow> read_rows(const std::filesystem::path& path, Format format) {
  const std::string content = read_file(path);
  std::vector<RawRow> rows;
  if (format == Format::csv) {
    auto parsed = csv::parse(content);
    if (parsed.empty()) return rows;
    const auto& header = parsed.front().fields;
    for (std::size_t r = 1; r < parsed.size(); ++r) {
      const auto& row = parsed[r];
      if (row.fields.size() != header.size()) {
        throw FormatError("expected " + std::to_string(header.size()) + " fields, found " +
                              std::to_string(row.fields.size()),
                          row.line);
      }
      RawRow raw;
      raw.line = row.line;
      for (std::size_t c = 0; c < header.size(); ++c) raw.fields[header[c]] = row.fields[c];
      rows.push_back(std::move(raw));
    }
    return rows;
  }
  std::size_t line_no = 0;
  std::istringstream in(content);
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (unicode::trim(line).empty()) continue;
    json obj;
    try {
      obj = json::parse(line);
    } catch (const json::parse_error& e) {
      throw FormatError(std::string("invalid JSON: ") + e.what(), line_no);
    }
    if (!obj.is_object()) throw FormatError("JSONL line is not an object", line_no);
    RawRow raw;
    raw.line = line_no;
    for (auto it = obj.begin(); it != obj.end(); ++it) raw.fields[it.key()] = it.value();
    rows.push_back(std::move(raw));
  }
  return rows;
}

bool any_row_has(const std::vector<RawRow>& rows, const std::string& key) {
  return std::any_of(rows.begin(), rows.end(), [&](const RawRow& r) { return r.fields.contains(key); });
}

template <std::size_t N>
std::string resolve_column(const std::vector<RawRow>& rows, const std::string& mapped,
                           const std::array<const char*, N>& aliases, const char* role) {
  if (!mapped.empty()) {
    if (!any_row_has(rows, mapped)) throw SchemaError(std::string("mapped ") + role + " column '" + mapped + "' not found");
    return mapped;
  }
  for (const char* alias : aliases) {
    if (any_row_has(rows, alias)) return alias;
  }
  throw SchemaError(std::string("no ") + role + " column found; map one explicitly");
}

std::string normalized_title_key(std::string_view title) {
  return unicode::collapse_whitespace(unicode::to_lower(title));
}

std::vector<std::string> token_set(std::string_view title) {
  std::vector<std::string> tokens;
  std::istringstream in(normalized_title_key(title));
  std::string t;
  while (in >> t) tokens.push_back(t);
  std::sort(tokens.begin(), tokens.end());
  tokens.erase(std::unique(tokens.begin(), tokens.end()), tokens.end());
  return tokens;
}

}  // namespace

std::string_view to_string(Source source) {
  switch (source) {
    case Source::kaggle1: return "kaggle1";
    case Source::kaggle2: return "kaggle2";
    case Source::cc17: return "cc17";
    case Source::other: return "other";
  }
  return "other";
}

Source parse_source(std::string_view tag) {
  if (tag == "kaggle1") return Source::kaggle1;
  if (tag == "kaggle2") return Source::kaggle2;
  if (tag == "cc17") return Source::cc17;
  if (tag == "other") return Source::other;
  throw SchemaError("unknown source tag '" + std::string(tag) + "'");
}

Format format_from_path(const std::filesystem::path& path) {
  const std::string ext = unicode::to_lower(path.extension().string());
  if (ext == ".csv") return Format::csv;
  if (ext == ".jsonl" || ext == ".json" || ext == ".ndjson") return Format::jsonl;
  throw SchemaError("cannot infer format from extension of " + path.string());
}

SchemaMap SchemaMap::cc17() {
  SchemaMap m;
  m.title = "targetTitle";
  m.title_fallbacks = {"postText"};
  m.label = "truthMedian";
  m.id = "id";
  m.source = Source::cc17;
  return m;
}

SchemaMap SchemaMap::from_config(const std::filesystem::path& path) {
  SchemaMap m;
  std::istringstream in(read_file(path));
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string trimmed = unicode::trim(line);
    if (trimmed.empty() || trimmed[0] == '#') continue;
    const auto eq = trimmed.find('=');
    if (eq == std::string::npos) throw FormatError("schema config: expected key = value", line_no);
    const std::string key = unicode::trim(trimmed.substr(0, eq));
    const std::string value = unicode::trim(trimmed.substr(eq + 1));
    if (key == "title") m.title = value;
    else if (key == "title_fallback") m.title_fallbacks.push_back(value);
    else if (key == "body") m.body = value;
    else if (key == "label") m.label = value;
    else if (key == "id") m.id = value;
    else if (key == "source") m.source = parse_source(value);
    else if (key == "label_file") m.label_file = path.parent_path() / value;
    else if (key == "label_file_id") m.label_file_id = value;
    else throw FormatError("schema config: unknown key '" + key + "'", line_no);
  }
  return m;
}

int binarize_label(double raw, double threshold) {
  if (!(raw >= 0.0 && raw <= 1.0)) throw DomainError("label score outside [0, 1]: " + std::to_string(raw));
  return raw >= threshold ? 1 : 0;
}

LoadResult load_corpus(const std::filesystem::path& path, Format format, const SchemaMap& schema) {
  std::vector<RawRow> rows = read_rows(path, format);
  LoadResult result;
  result.rows_read = rows.size();
  if (rows.empty()) return result;

  std::unordered_map<std::string, json> external_labels;
  std::string label_column;
  if (schema.label_file) {
    auto label_rows = read_rows(*schema.label_file, format_from_path(*schema.label_file));
    label_column = resolve_column(label_rows, schema.label, kLabelAliases, "label");
    for (auto& r : label_rows) {
      auto id_it = r.fields.find(schema.label_file_id);
      auto lab_it = r.fields.find(label_column);
      if (id_it == r.fields.end() || lab_it == r.fields.end()) continue;
      external_labels[text_value(id_it->second, false)] = lab_it->second;
    }
  } else {
    label_column = resolve_column(rows, schema.label, kLabelAliases, "label");
  }

  std::string title_column;
  if (!schema.title.empty() || schema.title_fallbacks.empty()) {
    try {
      title_column = resolve_column(rows, schema.title, kTitleAliases, "title");
    } catch (const SchemaError&) {
      if (schema.title_fallbacks.empty()) throw;
    }
  }
  if (title_column.empty()) {
    const bool any_fallback = std::any_of(schema.title_fallbacks.begin(), schema.title_fallbacks.end(),
                                          [&](const std::string& f) { return any_row_has(rows, f); });
    if (!any_fallback) throw SchemaError("no title column found (tried '" + schema.title + "' and fallbacks)");
  }
  if (schema.body && !any_row_has(rows, *schema.body)) {
    throw SchemaError("mapped body column '" + *schema.body + "' not found");
  }
  if (schema.id && !any_row_has(rows, *schema.id)) throw SchemaError("mapped id column '" + *schema.id + "' not found");

  const Source source = schema.source.value_or(label_column == "truthMedian" ? Source::cc17 : Source::other);
  const std::string stem = path.stem().string();

  for (const RawRow& row : rows) {
    auto field = [&](const std::string& key) -> const json* {
      auto it = row.fields.find(key);
      return it == row.fields.end() ? nullptr : &it->second;
    };
    std::string title;
    if (!title_column.empty()) {
      if (const json* v = field(title_column)) title = unicode::trim(text_value(*v, false));
    }
    for (std::size_t f = 0; title.empty() && f < schema.title_fallbacks.size(); ++f) {
      if (const json* v = field(schema.title_fallbacks[f])) title = unicode::trim(text_value(*v, false));
    }
    if (title.empty()) {
      ++result.dropped_empty_title;
      continue;
    }

    std::string raw_id = std::to_string(row.line);
    if (schema.id) {
      if (const json* v = field(*schema.id)) raw_id = text_value(*v, false);
    }

    const json* label_value = nullptr;
    if (schema.label_file) {
      auto it = external_labels.find(raw_id);
      if (it != external_labels.end()) label_value = &it->second;
    } else {
      label_value = field(label_column);
    }
    std::optional<ParsedLabel> label;
    try {
      if (label_value) label = parse_label(*label_value);
    } catch (const std::exception& e) {
      throw FormatError(e.what(), row.line);
    }
    if (!label) {
      ++result.dropped_missing_label;
      continue;
    }

    CorpusRecord rec;
    rec.id = stem + ":" + raw_id;
    rec.title = unicode::to_nfc(title);
    if (schema.body) {
      if (const json* v = field(*schema.body)) {
        std::string body = unicode::trim(text_value(*v, true));
        if (!body.empty()) rec.body = unicode::to_nfc(body);
      }
    }
    rec.source = source;
    rec.raw_label = label->raw;
    rec.graded = label->graded;
    rec.label = label->label;
    result.records.push_back(std::move(rec));
  }
  return result;
}

double title_jaccard(std::string_view a, std::string_view b) {
  const auto sa = token_set(a);
  const auto sb = token_set(b);
  if (sa.empty() && sb.empty()) return 1.0;
  std::vector<std::string> inter;
  std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(inter));
  const double uni = static_cast<double>(sa.size() + sb.size() - inter.size());
  return static_cast<double>(inter.size()) / uni;
}

std::vector<CorpusRecord> deduplicate(const std::vector<CorpusRecord>& records, std::optional<double> jaccard_threshold) {
  std::vector<CorpusRecord> out;
  std::unordered_set<std::string> exact;

  if (!jaccard_threshold) {
    for (const auto& r : records) {
      if (exact.insert(normalized_title_key(r.title)).second) out.push_back(r);
    }
    return out;
  }
  const double t = *jaccard_threshold;

  // Token sets ordered rare-first so that prefix filtering prunes candidates:
  // two sets with Jaccard >= t must share a token within their prefixes.
  std::vector<std::vector<std::string>> sets(records.size());
  std::unordered_map<std::string, std::size_t> df;
  for (std::size_t i = 0; i < records.size(); ++i) {
    sets[i] = token_set(records[i].title);
    for (const auto& tok : sets[i]) ++df[tok];
  }
  std::unordered_map<std::string, std::uint32_t> rank;
  {
    std::vector<std::pair<std::size_t, std::string>> order;
    order.reserve(df.size());
    for (const auto& [tok, n] : df) order.emplace_back(n, tok);
    std::sort(order.begin(), order.end());
    for (std::size_t i = 0; i < order.size(); ++i) rank[order[i].second] = static_cast<std::uint32_t>(i);
  }
  std::vector<std::vector<std::uint32_t>> ids(records.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    for (const auto& tok : sets[i]) ids[i].push_back(rank[tok]);
    std::sort(ids[i].begin(), ids[i].end());
  }

  auto prefix_length = [t](std::size_t size) {
    const double needed = std::ceil(t * static_cast<double>(size) - 1e-9);
    const auto overlap = static_cast<std::size_t>(std::max(0.0, needed));
    return std::clamp<std::size_t>(size + 1 - std::min(overlap, size), 1, std::max<std::size_t>(size, 1));
  };
  auto jaccard = [](const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    std::size_t i = 0, j = 0, inter = 0;
    while (i < a.size() && j < b.size()) {
      if (a[i] == b[j]) ++inter, ++i, ++j;
      else if (a[i] < b[j]) ++i;
      else ++j;
    }
    const std::size_t uni = a.size() + b.size() - inter;
    return uni == 0 ? 1.0 : static_cast<double>(inter) / static_cast<double>(uni);
  };

  std::unordered_map<std::uint32_t, std::vector<std::size_t>> index;  // token -> kept record ids
  std::vector<std::uint32_t> seen_mark(records.size(), 0);
  std::uint32_t stamp = 0;
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (!exact.insert(normalized_title_key(records[i].title)).second) continue;
    const auto& a = ids[i];
    const std::size_t p = std::min(prefix_length(a.size()), a.size());
    bool duplicate = false;
    ++stamp;
    for (std::size_t k = 0; k < p && !duplicate; ++k) {
      auto it = index.find(a[k]);
      if (it == index.end()) continue;
      for (std::size_t cand : it->second) {
        if (seen_mark[cand] == stamp) continue;
        seen_mark[cand] = stamp;
        if (jaccard(a, ids[cand]) > t) {
          duplicate = true;
          break;
        }
      }
    }
    if (duplicate) continue;
    for (std::size_t k = 0; k < p; ++k) index[a[k]].push_back(i);
    out.push_back(records[i]);
  }
  return out;
}

std::vector<CorpusRecord> filter_length(const std::vector<CorpusRecord>& records, std::size_t min_chars,
                                        std::size_t max_chars) {
  if (min_chars > max_chars) throw DomainError("filter_length: min_chars > max_chars");
  std::vector<CorpusRecord> out;
  for (const auto& r : records) {
    const std::size_t n = unicode::length(r.title);
    if (n >= min_chars && n <= max_chars) out.push_back(r);
  }
  return out;
}

LanguagePredicate accept_all_languages() {
  return [](const CorpusRecord&) { return true; };
}

LanguagePredicate heuristic_english() {
  return [](const CorpusRecord& r) {
    std::size_t letters = 0, ascii = 0;
    for (char32_t cp : unicode::decode(r.title)) {
      if (!unicode::is_letter(cp)) continue;
      ++letters;
      if (cp < 0x80) ++ascii;
    }
    if (letters == 0 || static_cast<double>(ascii) < 0.9 * static_cast<double>(letters)) return false;
    const auto tokens = textstats::tokenize(r.title).tokens;
    if (tokens.size() < 4) return true;
    const auto& stop = textstats::LexiconSet::defaults().stopwords;
    std::size_t hits = 0;
    for (const auto& t : tokens) hits += stop.contains(textstats::lookup_key(t)) ? 1 : 0;
    return static_cast<double>(hits) * 10.0 >= static_cast<double>(tokens.size());
  };
}

std::vector<CorpusRecord> filter_language(const std::vector<CorpusRecord>& records, const LanguagePredicate& keep) {
  std::vector<CorpusRecord> out;
  std::copy_if(records.begin(), records.end(), std::back_inserter(out), keep);
  return out;
}

std::vector<CorpusRecord> balance(const std::vector<CorpusRecord>& records, std::size_t per_class, std::uint64_t seed) {
  std::array<std::vector<std::size_t>, 2> by_class;
  for (std::size_t i = 0; i < records.size(); ++i) by_class[records[i].label == 1 ? 1 : 0].push_back(i);
  static constexpr const char* kNames[] = {"non-clickbait (0)", "clickbait (1)"};
  for (int c = 0; c < 2; ++c) {
    if (by_class[c].size() < per_class) {
      throw CapacityError(std::string("balance: class ") + kNames[c] + " has " + std::to_string(by_class[c].size()) +
                          " records, " + std::to_string(per_class) + " required");
    }
  }
  std::vector<std::size_t> chosen;
  for (int c = 0; c < 2; ++c) {
    Rng rng(mix_seed(seed, static_cast<std::uint64_t>(c)));
    auto& idx = by_class[c];
    rng.shuffle(std::span<std::size_t>(idx));
    chosen.insert(chosen.end(), idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(per_class));
  }
  std::sort(chosen.begin(), chosen.end());
  std::vector<CorpusRecord> out;
  out.reserve(chosen.size());
  for (std::size_t i : chosen) out.push_back(records[i]);
  return out;
}

SplitSet stratified_split(const std::vector<CorpusRecord>& records, SplitRatios ratios, std::uint64_t seed) {
  const std::array<double, 3> r = {ratios.train, ratios.validation, ratios.test};
  if (std::any_of(r.begin(), r.end(), [](double x) { return !(x >= 0.0); }) ||
      std::abs(r[0] + r[1] + r[2] - 1.0) > 1e-9) {
    throw StratificationError("split ratios must be non-negative and sum to 1");
  }
  std::array<std::vector<std::size_t>, 2> by_class;
  for (std::size_t i = 0; i < records.size(); ++i) by_class[records[i].label == 1 ? 1 : 0].push_back(i);
  for (int c = 0; c < 2; ++c) {
    if (!by_class[c].empty() && by_class[c].size() < 3) {
      throw StratificationError("class " + std::to_string(c) + " has " + std::to_string(by_class[c].size()) +
                                " records; at least 3 required");
    }
  }
  if (records.empty()) throw StratificationError("cannot split an empty corpus");

  // Largest-remainder rounding: first the split totals, then each class's
  // cells so that rows sum to class sizes and columns to split totals.
  const double n_total = static_cast<double>(records.size());
  std::array<std::size_t, 3> totals{};
  {
    std::array<double, 3> frac{};
    std::size_t assigned = 0;
    for (int s = 0; s < 3; ++s) {
      const double exact = n_total * r[s];
      totals[s] = static_cast<std::size_t>(std::floor(exact));
      frac[s] = exact - std::floor(exact);
      assigned += totals[s];
    }
    std::array<int, 3> order = {0, 1, 2};
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return frac[a] > frac[b]; });
    for (std::size_t k = 0; assigned < records.size(); ++k, ++assigned) ++totals[order[k % 3]];
  }

  std::array<std::array<std::size_t, 3>, 2> cells{};
  std::array<std::size_t, 2> row_left{};
  std::array<std::size_t, 3> col_left = totals;
  struct Cell {
    double frac;
    int cls;
    int split;
  };
  std::vector<Cell> pending;
  for (int c = 0; c < 2; ++c) {
    const double nc = static_cast<double>(by_class[c].size());
    std::size_t used = 0;
    for (int s = 0; s < 3; ++s) {
      const double exact = nc * r[s];
      cells[c][s] = static_cast<std::size_t>(std::floor(exact));
      used += cells[c][s];
      col_left[s] -= std::min(col_left[s], cells[c][s]);
      pending.push_back({exact - std::floor(exact), c, s});
    }
    row_left[c] = by_class[c].size() - used;
  }
  std::stable_sort(pending.begin(), pending.end(), [](const Cell& a, const Cell& b) { return a.frac > b.frac; });
  while (row_left[0] + row_left[1] > 0) {
    bool progressed = false;
    for (const Cell& cell : pending) {
      if (row_left[cell.cls] == 0 || col_left[cell.split] == 0) continue;
      ++cells[cell.cls][cell.split];
      --row_left[cell.cls];
      --col_left[cell.split];
      progressed = true;
    }
    if (!progressed) throw StratificationError("could not reconcile split sizes");
  }

  SplitSet out;
  out.seed = seed;
  std::array<std::vector<std::size_t>, 3> members;
  for (int c = 0; c < 2; ++c) {
    auto idx = by_class[c];
    Rng rng(mix_seed(seed, 100 + static_cast<std::uint64_t>(c)));
    rng.shuffle(std::span<std::size_t>(idx));
    std::size_t pos = 0;
    for (int s = 0; s < 3; ++s) {
      for (std::size_t k = 0; k < cells[c][s]; ++k) members[s].push_back(idx[pos++]);
    }
  }
  std::array<std::vector<CorpusRecord>*, 3> targets = {&out.train, &out.validation, &out.test};
  for (int s = 0; s < 3; ++s) {
    std::sort(members[s].begin(), members[s].end());
    for (std::size_t i : members[s]) targets[s]->push_back(records[i]);
  }
  return out;
}

json to_json(const CorpusRecord& record) {
  json j;
  j["id"] = record.id;
  j["title"] = record.title;
  if (record.body) j["body"] = *record.body;
  j["source"] = std::string(to_string(record.source));
  j["label"] = record.label;
  return j;
}

CorpusRecord from_json(const json& j) {
  if (!j.is_object()) throw SchemaError("record is not a JSON object");
  for (const char* key : {"id", "title", "label"}) {
    if (!j.contains(key)) throw SchemaError(std::string("record missing field '") + key + "'");
  }
  CorpusRecord r;
  r.id = j.at("id").is_string() ? j.at("id").get<std::string>() : j.at("id").dump();
  r.title = j.at("title").get<std::string>();
  if (j.contains("body") && j.at("body").is_string()) r.body = j.at("body").get<std::string>();
  if (j.contains("source")) r.source = parse_source(j.at("source").get<std::string>());
  const int label = j.at("label").get<int>();
  if (label != 0 && label != 1) throw SchemaError("record label must be 0 or 1");
  r.label = label;
  r.raw_label = static_cast<double>(label);
  if (unicode::trim(r.title).empty()) throw SchemaError("record '" + r.id + "' has an empty title");
  return r;
}

void write_jsonl(const std::vector<CorpusRecord>& records, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  for (const auto& r : records) out << to_json(r).dump() << '\n';
}

std::vector<CorpusRecord> read_jsonl(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::vector<CorpusRecord> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (unicode::trim(line).empty()) continue;
    try {
      out.push_back(from_json(json::parse(line)));
    } catch (const json::exception& e) {
      throw FormatError(std::string("invalid record: ") + e.what(), line_no);
    } catch (const SchemaError& e) {
      throw FormatError(e.what(), line_no);
    }
  }
  return out;
}

void write_split(const SplitSet& split, const std::filesystem::path& dir, const json& filter_settings) {
  std::filesystem::create_directories(dir);
  write_jsonl(split.train, dir / "train.jsonl");
  write_jsonl(split.validation, dir / "validation.jsonl");
  write_jsonl(split.test, dir / "test.jsonl");
  auto counts = [](const std::vector<CorpusRecord>& rs) {
    const auto pos = std::count_if(rs.begin(), rs.end(), [](const CorpusRecord& r) { return r.label == 1; });
    return json{{"total", rs.size()}, {"clickbait", pos}, {"non_clickbait", static_cast<long>(rs.size()) - pos}};
  };
  json meta;
  meta["schema_version"] = 1;
  meta["seed"] = split.seed;
  meta["counts"] = {{"train", counts(split.train)}, {"validation", counts(split.validation)}, {"test", counts(split.test)}};
  meta["filters"] = filter_settings;
  std::ofstream out(dir / "split_meta.json", std::ios::binary);
  if (!out) throw Error("cannot write split metadata in " + dir.string());
  out << meta.dump(2) << '\n';
}

}  // namespace clickbait::corpus
