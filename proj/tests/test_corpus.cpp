#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "clickbait/corpus.hpp"
#include "clickbait/error.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace clickbait;
using namespace clickbait::corpus;

namespace {

CorpusRecord rec(std::string id, std::string title, int label) {
  CorpusRecord r;
  r.id = std::move(id);
  r.title = std::move(title);
  r.label = label;
  return r;
}

std::vector<CorpusRecord> make_records(std::size_t pos, std::size_t neg) {
  std::vector<CorpusRecord> out;
  for (std::size_t i = 0; i < pos + neg; ++i) {
    const int label = i < pos ? 1 : 0;
    out.push_back(rec("r" + std::to_string(i), "headline number " + std::to_string(i), label));
  }
  return out;
}

std::size_t count_label(const std::vector<CorpusRecord>& rs, int label) {
  return static_cast<std::size_t>(std::count_if(rs.begin(), rs.end(), [&](const CorpusRecord& r) { return r.label == label; }));
}

}  // namespace

TEST_CASE("load_corpus drops empty titles and counts them") {
  testsupport::TempDir dir;
  testsupport::write_file(dir / "k1.csv", "title,label\n\"Cats Are Great\",0\n\"\",1\n");
  const auto res = load_corpus(dir / "k1.csv", Format::csv, SchemaMap{});
  REQUIRE(res.records.size() == 1);
  CHECK(res.dropped_empty_title == 1);
  CHECK(res.records[0].title == "Cats Are Great");
  CHECK(res.records[0].label == 0);
  CHECK(res.records[0].id == "k1:2");
}

TEST_CASE("graded CC17 labels are binarized at 0.5") {
  testsupport::TempDir dir;
  testsupport::write_file(dir / "cc.jsonl",
                          R"({"id":"a","targetTitle":"X happened","truthMedian":0.66})"
                          "\n"
                          R"({"id":"b","targetTitle":"Y","truthMedian":0.33})"
                          "\n");
  SchemaMap schema;
  schema.title = "targetTitle";
  schema.label = "truthMedian";
  schema.id = "id";
  const auto res = load_corpus(dir / "cc.jsonl", Format::jsonl, schema);
  REQUIRE(res.records.size() == 2);
  CHECK(res.records[0].label == 1);
  CHECK(res.records[0].graded);
  CHECK(res.records[0].raw_label == doctest::Approx(0.66));
  CHECK(res.records[0].source == Source::cc17);
  CHECK(res.records[1].label == 0);
}

TEST_CASE("CC17 title falls back to the first postText entry") {
  testsupport::TempDir dir;
  testsupport::write_file(dir / "cc.jsonl",
                          R"({"id":"1","targetTitle":"","postText":["Post one","x"],"truthMedian":1.0})"
                          "\n");
  auto schema = SchemaMap::cc17();
  schema.id = "id";
  const auto res = load_corpus(dir / "cc.jsonl", Format::jsonl, schema);
  REQUIRE(res.records.size() == 1);
  CHECK(res.records[0].title == "Post one");
}

TEST_CASE("labels can come from a separate truth file joined by id") {
  testsupport::TempDir dir;
  testsupport::write_file(dir / "instances.jsonl",
                          R"({"id":"7","targetTitle":"Some title here"})"
                          "\n"
                          R"({"id":"8","targetTitle":"Another title"})"
                          "\n");
  testsupport::write_file(dir / "truth.jsonl", R"({"id":"7","truthMedian":0.0})" "\n");
  testsupport::write_file(dir / "schema.conf",
                          "title = targetTitle\nlabel = truthMedian\nid = id\nlabel_file = truth.jsonl\n");
  const auto schema = SchemaMap::from_config(dir / "schema.conf");
  const auto res = load_corpus(dir / "instances.jsonl", Format::jsonl, schema);
  REQUIRE(res.records.size() == 1);
  CHECK(res.records[0].id == "instances:7");
  CHECK(res.dropped_missing_label == 1);
}

TEST_CASE("malformed input reports a format error with the line number") {
  testsupport::TempDir dir;
  testsupport::write_file(dir / "bad.csv", "title,label\nok title,1\n\"unterminated,0\n");
  try {
    load_corpus(dir / "bad.csv", Format::csv, SchemaMap{});
    FAIL("expected FormatError");
  } catch (const FormatError& e) {
    CHECK(e.line() == 3);
  }
  testsupport::write_file(dir / "bad.jsonl", "{\"title\":\"a\",\"label\":1}\n{not json}\n");
  try {
    load_corpus(dir / "bad.jsonl", Format::jsonl, SchemaMap{});
    FAIL("expected FormatError");
  } catch (const FormatError& e) {
    CHECK(e.line() == 2);
  }
  testsupport::write_file(dir / "badlabel.csv", "title,label\nok title,maybe\n");
  CHECK_THROWS_AS(load_corpus(dir / "badlabel.csv", Format::csv, SchemaMap{}), FormatError);
}

TEST_CASE("a mapped column that is missing is a schema error") {
  testsupport::TempDir dir;
  testsupport::write_file(dir / "k.csv", "headline,label\nSome title,1\n");
  SchemaMap schema;
  schema.title = "title_text";
  CHECK_THROWS_AS(load_corpus(dir / "k.csv", Format::csv, schema), SchemaError);
  SchemaMap body_schema;
  body_schema.body = "article";
  CHECK_THROWS_AS(load_corpus(dir / "k.csv", Format::csv, body_schema), SchemaError);
}

TEST_CASE("titles are NFC-normalized on load") {
  testsupport::TempDir dir;
  testsupport::write_file(dir / "n.csv", "title,label\n\"Cafe\xCC\x81 opens downtown\",0\n");
  const auto res = load_corpus(dir / "n.csv", Format::csv, SchemaMap{});
  REQUIRE(res.records.size() == 1);
  CHECK(res.records[0].title == "Caf\xC3\xA9 opens downtown");
}

TEST_CASE("binarize_label") {
  CHECK(binarize_label(0.66) == 1);
  CHECK(binarize_label(0.0) == 0);
  CHECK(binarize_label(0.5) == 1);
  CHECK(binarize_label(0.33) == 0);
  CHECK(binarize_label(1.0) == 1);
  CHECK_THROWS_AS(binarize_label(1.5), DomainError);
  CHECK_THROWS_AS(binarize_label(-0.1), DomainError);
  int prev = 0;
  for (int i = 0; i <= 1000; ++i) {
    const int b = binarize_label(i / 1000.0);
    CHECK(b >= prev);
    prev = b;
  }
}

TEST_CASE("deduplicate worked examples") {
  auto titles = [](const std::vector<CorpusRecord>& rs) {
    std::vector<std::string> t;
    for (const auto& r : rs) t.push_back(r.title);
    return t;
  };
  CHECK(titles(deduplicate({rec("1", "a b c", 0), rec("2", "a b c", 1)})) == std::vector<std::string>{"a b c"});
  const std::vector<CorpusRecord> near{rec("1", "a b c d e f g h i j", 0), rec("2", "a b c d e f g h i k", 0)};
  CHECK(title_jaccard(near[0].title, near[1].title) == doctest::Approx(9.0 / 11.0));
  CHECK(deduplicate(near, 0.9).size() == 2);
  CHECK(titles(deduplicate(near, 0.8)) == std::vector<std::string>{"a b c d e f g h i j"});
  CHECK(deduplicate({rec("1", "x y", 0), rec("2", "p q", 0)}).size() == 2);
  CHECK(deduplicate({rec("1", "Same Title", 0), rec("2", "same   title", 0)}, std::nullopt).size() == 1);
}

TEST_CASE("deduplicate matches a brute-force oracle and is idempotent") {
  std::mt19937 gen(3);
  const std::vector<std::string> vocab{"a", "b", "c", "d", "e", "f", "g", "h"};
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<CorpusRecord> rs;
    const int n = std::uniform_int_distribution<int>(1, 40)(gen);
    for (int i = 0; i < n; ++i) {
      std::string t;
      const int len = std::uniform_int_distribution<int>(1, 6)(gen);
      for (int k = 0; k < len; ++k) t += vocab[std::uniform_int_distribution<std::size_t>(0, vocab.size() - 1)(gen)] + " ";
      rs.push_back(rec(std::to_string(i), t, i % 2));
    }
    const double threshold = std::uniform_real_distribution<double>(0.3, 0.95)(gen);
    std::vector<std::string> expected;
    for (const auto& r : rs) {
      bool keep = true;
      for (const auto& e : expected) keep = keep && !(oracle::jaccard(r.title, e) > threshold) && oracle::token_set(r.title) != oracle::token_set(e);
      if (keep) expected.push_back(r.title);
    }
    const auto once = deduplicate(rs, threshold);
    std::vector<std::string> got;
    for (const auto& r : once) got.push_back(r.title);
    CHECK(got == expected);
    CHECK(deduplicate(once, threshold) == once);
    for (std::size_t i = 0; i < once.size(); ++i)
      for (std::size_t j = i + 1; j < once.size(); ++j) CHECK(title_jaccard(once[i].title, once[j].title) <= threshold);
  }
}

TEST_CASE("title_jaccard agrees with the brute-force oracle") {
  std::mt19937 gen(5);
  const std::vector<std::string> vocab{"the", "cat", "dog", "ran", "fast", "home", "The", "CAT"};
  for (int trial = 0; trial < 500; ++trial) {
    std::string a, b;
    for (int k = std::uniform_int_distribution<int>(1, 7)(gen); k > 0; --k) a += vocab[gen() % vocab.size()] + " ";
    for (int k = std::uniform_int_distribution<int>(1, 7)(gen); k > 0; --k) b += vocab[gen() % vocab.size()] + " ";
    CHECK(title_jaccard(a, b) == doctest::Approx(oracle::jaccard(a, b)).epsilon(1e-12));
  }
}

TEST_CASE("filter_length bounds are inclusive") {
  const std::vector<CorpusRecord> rs{rec("a", std::string(10, 'x'), 0), rec("b", std::string(11, 'x'), 0),
                                     rec("c", std::string(200, 'x'), 0), rec("d", std::string(124, 'x'), 0),
                                     rec("e", std::string(125, 'x'), 0)};
  const auto out = filter_length(rs);
  REQUIRE(out.size() == 2);
  CHECK(out[0].id == "b");
  CHECK(out[1].id == "d");
  CHECK(filter_length({rec("u", "ééééééééééé", 0)}).size() == 1);
}

TEST_CASE("language filter hook") {
  const std::vector<CorpusRecord> rs{rec("1", "The cat is on the mat today", 0), rec("2", "Der Hund ist sehr schnell", 0),
                                     rec("3", "東京で新しい店がオープン", 1)};
  CHECK(filter_language(rs, accept_all_languages()).size() == 3);
  const auto en = filter_language(rs, heuristic_english());
  REQUIRE_FALSE(en.empty());
  CHECK(en[0].id == "1");
  CHECK(std::none_of(en.begin(), en.end(), [](const CorpusRecord& r) { return r.id == "3"; }));
}

TEST_CASE("balance samples exactly per_class of each class") {
  const auto big = make_records(300, 250);
  const auto out = balance(big, 200, 42);
  CHECK(out.size() == 400);
  CHECK(count_label(out, 1) == 200);
  CHECK(count_label(out, 0) == 200);
  std::set<std::string> ids;
  for (const auto& r : out) ids.insert(r.id);
  CHECK(ids.size() == 400);
  CHECK(balance(big, 200, 42) == out);
  CHECK(balance(big, 200, 43) != out);

  const auto small = make_records(100, 100);
  CHECK(balance(small, 100, 42) == small);

  try {
    balance(make_records(50, 200), 100, 42);
    FAIL("expected CapacityError");
  } catch (const CapacityError& e) {
    CHECK(std::string(e.what()).find("clickbait") != std::string::npos);
  }
}

TEST_CASE("stratified split worked examples") {
  const auto s = stratified_split(make_records(50, 50), {}, 42);
  CHECK(s.train.size() == 80);
  CHECK(s.validation.size() == 10);
  CHECK(s.test.size() == 10);
  CHECK(count_label(s.train, 1) == 40);
  CHECK(count_label(s.train, 0) == 40);
  CHECK(count_label(s.validation, 1) == 5);
  CHECK(count_label(s.test, 0) == 5);

  const auto small = stratified_split(make_records(5, 5), {}, 42);
  CHECK(small.train.size() == 8);
  CHECK(small.validation.size() == 1);
  CHECK(small.test.size() == 1);

  const auto again = stratified_split(make_records(50, 50), {}, 42);
  CHECK(again.train == s.train);
  CHECK(again.validation == s.validation);
  CHECK(again.test == s.test);

  CHECK_THROWS_AS(stratified_split(make_records(2, 50), {}, 42), StratificationError);
  CHECK_THROWS(stratified_split(make_records(10, 10), {0.5, 0.3, 0.3}, 42));
}

TEST_CASE("stratified split partitions its input and preserves class ratios") {
  std::mt19937 gen(9);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t pos = std::uniform_int_distribution<std::size_t>(3, 120)(gen);
    const std::size_t neg = std::uniform_int_distribution<std::size_t>(3, 120)(gen);
    const auto rs = make_records(pos, neg);
    const auto s = stratified_split(rs, {}, gen());
    std::multiset<std::string> ids;
    for (const auto* part : {&s.train, &s.validation, &s.test})
      for (const auto& r : *part) ids.insert(r.id);
    CHECK(ids.size() == rs.size());
    CHECK(std::set<std::string>(ids.begin(), ids.end()).size() == rs.size());
    const double n = static_cast<double>(rs.size());
    const std::pair<const std::vector<CorpusRecord>*, double> parts[] = {{&s.train, 0.8}, {&s.validation, 0.1}, {&s.test, 0.1}};
    for (const auto& [part, ratio] : parts) {
      CHECK(std::abs(static_cast<double>(part->size()) - ratio * n) <= 1.0 + 1e-9);
      CHECK(std::abs(static_cast<double>(count_label(*part, 1)) - ratio * static_cast<double>(pos)) <= 1.0 + 1e-9);
      CHECK(std::abs(static_cast<double>(count_label(*part, 0)) - ratio * static_cast<double>(neg)) <= 1.0 + 1e-9);
    }
  }
}

TEST_CASE("canonical JSONL round-trips records") {
  testsupport::TempDir dir;
  auto a = rec("k1:1", "Title \"quoted\" é", 1);
  a.body = "Body text";
  a.source = Source::kaggle1;
  auto b = rec("k2:9", "Plain", 0);
  b.source = Source::cc17;
  write_jsonl({a, b}, dir / "x.jsonl");
  const auto back = read_jsonl(dir / "x.jsonl");
  REQUIRE(back.size() == 2);
  CHECK(back[0].id == a.id);
  CHECK(back[0].title == a.title);
  CHECK(back[0].body == a.body);
  CHECK(back[0].source == Source::kaggle1);
  CHECK(back[0].label == 1);
  CHECK(back[1].source == Source::cc17);
}

TEST_CASE("load, dedup, filter, balance and split is bit-reproducible") {
  testsupport::TempDir d1, d2;
  for (const auto* dir : {&d1, &d2}) {
    auto rs = load_corpus(testsupport::fixture_corpus(), Format::csv, SchemaMap{}).records;
    rs = filter_length(deduplicate(rs, 0.9));
    rs = balance(rs, 100, 42);
    write_split(stratified_split(rs, {}, 42), dir->path(), nlohmann::json::object());
  }
  for (const char* f : {"train.jsonl", "validation.jsonl", "test.jsonl", "split_meta.json"}) {
    CHECK(testsupport::read_file(d1 / f) == testsupport::read_file(d2 / f));
    CHECK_FALSE(testsupport::read_file(d1 / f).empty());
  }
}
