#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "clickbait/error.hpp"
#include "clickbait/fusion.hpp"
#include "clickbait/tfidf.hpp"
#include "clickbait/vectors.hpp"
#include "support.hpp"

using namespace clickbait;
using namespace clickbait::representations;

namespace {

std::vector<double> random_vector(std::mt19937_64& gen, std::size_t dim) {
  std::normal_distribution<double> n(0.0, 1.0);
  std::vector<double> v(dim);
  for (auto& x : v) x = n(gen);
  return v;
}

}  // namespace

TEST_CASE("TF-IDF two-document vocabulary") {
  const auto m = VocabularyModel::fit({"a b", "a c"});
  CHECK(m.terms() == std::vector<std::string>{"a", "a b", "a c", "b", "c"});
  CHECK(m.document_frequency("a") == 2);
  CHECK(m.document_frequency("b") == 1);
  CHECK(m.document_frequency("a c") == 1);
  CHECK_FALSE(m.document_frequency("b c").has_value());
  CHECK(m.find("a")->idf == doctest::Approx(std::log(3.0 / 3.0) + 1.0));
  CHECK(m.find("b")->idf == doctest::Approx(std::log(3.0 / 2.0) + 1.0));
  for (std::size_t i = 0; i < m.size(); ++i) CHECK(m.find(m.terms()[i])->index == i);
}

TEST_CASE("TF-IDF transform") {
  const auto single = VocabularyModel::fit({"a"});
  const auto v = single.transform("a a");
  REQUIRE(v.dim() == 1);
  CHECK(v.values[0] == doctest::Approx(1.0));
  CHECK(v.normalized);
  CHECK(v.provenance == Provenance::tfidf);

  const auto m = VocabularyModel::fit({"a b", "a c"});
  const auto oov = m.transform("zzz qqq");
  CHECK(oov.zero);
  CHECK(l2_norm(oov.values) == 0.0);
  const auto doc = m.transform("a b");
  CHECK_FALSE(doc.zero);
  CHECK(std::abs(l2_norm(doc.values) - 1.0) <= 1e-6);
  CHECK(m.transform("a b").values == doc.values);

  const auto sparse = m.transform_sparse("a b");
  for (const auto& [i, w] : sparse) CHECK(doc.values[i] == w);
}

TEST_CASE("single-document corpus gives equal idf") {
  const auto m = VocabularyModel::fit({"x y z x"});
  const double idf = m.find("x")->idf;
  for (const auto& t : m.terms()) CHECK(m.find(t)->idf == idf);
}

TEST_CASE("TF-IDF raw and cleaned variants") {
  TfidfOptions raw;
  TfidfOptions cleaned;
  cleaned.cleaned = true;
  CHECK(extract_terms("Wow!", raw) == std::vector<std::string>{"wow", "!", "wow !"});
  CHECK(extract_terms("Wow!", cleaned) == std::vector<std::string>{"wow"});
  CHECK_THROWS_AS(VocabularyModel::fit({}), FitError);
}

TEST_CASE("TF-IDF max_features keeps the most frequent terms") {
  TfidfOptions o;
  o.ngram_max = 1;
  o.max_features = 2;
  const auto m = VocabularyModel::fit({"a a a b b c", "a b d"}, o);
  CHECK(m.terms() == std::vector<std::string>{"a", "b"});
}

TEST_CASE("TF-IDF vocabulary saves and loads") {
  testsupport::TempDir dir;
  const auto m = VocabularyModel::fit({"the cat sat", "the dog ran", "a cat ran"});
  m.save(dir / "vocab.json");
  const auto back = VocabularyModel::load(dir / "vocab.json");
  CHECK(back.terms() == m.terms());
  CHECK(back.fingerprint() == m.fingerprint());
  CHECK(back.transform("the cat ran").values == m.transform("the cat ran").values);
  const auto j = m.to_json();
  CHECK(j.at("ngram_range") == nlohmann::json::array({1, 2}));
  CHECK(j.at("terms").at("cat").size() == 2);
}

TEST_CASE("mean pooling") {
  WordVectorTable table(2);
  table.add("v", std::vector<double>{1.0, 0.0});
  table.add("w", std::vector<double>{0.0, 1.0});
  table.add("n", std::vector<double>{-1.0, 0.0});
  CHECK(mean_pool_word_vectors("v", table).values == std::vector<double>{1.0, 0.0});
  CHECK(mean_pool_word_vectors("V w", table).values == std::vector<double>{0.5, 0.5});
  const auto cancel = mean_pool_word_vectors("v n", table);
  CHECK(cancel.zero);
  const auto oov = mean_pool_word_vectors("nothing here", table);
  CHECK(oov.zero);
  CHECK(oov.dim() == 2);
  CHECK(oov.provenance == Provenance::word_vectors);
}

TEST_CASE("pooled cosine is invariant to scaling the table") {
  std::mt19937_64 gen(4);
  const std::vector<std::string> words{"alpha", "beta", "gamma", "delta", "eps"};
  WordVectorTable a(8), b(8);
  for (const auto& w : words) {
    auto v = random_vector(gen, 8);
    a.add(w, v);
    for (auto& x : v) x *= 3.5;
    b.add(w, v);
  }
  for (const auto& [s, t] : std::vector<std::pair<std::string, std::string>>{
           {"alpha beta", "gamma delta"}, {"eps", "alpha eps beta"}, {"delta delta", "beta"}}) {
    const auto ca = cosine(mean_pool_word_vectors(s, a).values, mean_pool_word_vectors(t, a).values);
    const auto cb = cosine(mean_pool_word_vectors(s, b).values, mean_pool_word_vectors(t, b).values);
    REQUIRE(ca.has_value());
    CHECK(*ca == doctest::Approx(*cb).epsilon(1e-12));
  }
}

TEST_CASE("word vector files") {
  testsupport::TempDir dir;
  testsupport::write_file(dir / "ok.txt", "2 3\ncat 1 0 0\ndog 0 1 0\ncat 9 9 9\n");
  const auto t = WordVectorTable::load(dir / "ok.txt");
  CHECK(t.dim() == 3);
  CHECK(t.size() == 2);
  CHECK((*t.find("cat"))[0] == 1.0);
  testsupport::write_file(dir / "noheader.txt", "cat 1 0\ndog 0 1\n");
  CHECK(WordVectorTable::load(dir / "noheader.txt").dim() == 2);
  testsupport::write_file(dir / "ragged.txt", "cat 1 0 0\ndog 0 1\n");
  CHECK_THROWS_AS(WordVectorTable::load(dir / "ragged.txt"), LoadError);
  testsupport::write_file(dir / "nan.txt", "cat 1 x 0\n");
  CHECK_THROWS_AS(WordVectorTable::load(dir / "nan.txt"), LoadError);
  CHECK_THROWS_AS(WordVectorTable::load(dir / "missing.txt"), LoadError);
}

TEST_CASE("truncate_normalize yields unit vectors with the prefix property") {
  std::mt19937_64 gen(42);
  for (int i = 0; i < 100; ++i) {
    const auto v = random_vector(gen, 3072);
    auto w = v;
    for (std::size_t k = 100; k < w.size(); ++k) w[k] = std::uniform_real_distribution<double>(-50, 50)(gen);
    for (std::size_t d : {3072u, 1000u, 100u, 30u}) {
      const auto t = truncate_normalize(v, d, Provenance::remote_embedding);
      CHECK(t.dim() == d);
      CHECK(t.normalized);
      CHECK(std::abs(l2_norm(t.values) - 1.0) <= 1e-6);
    }
    for (std::size_t d : {30u, 100u}) CHECK(truncate_normalize(v, d, Provenance::remote_embedding).values ==
                                            truncate_normalize(w, d, Provenance::remote_embedding).values);
  }
  const std::vector<double> zero(10, 0.0);
  const auto z = truncate_normalize(zero, 5, Provenance::remote_embedding);
  CHECK(z.zero);
  CHECK_FALSE(z.normalized);
}

TEST_CASE("cosine edge cases") {
  const std::vector<double> a{1, 0}, b{0, 1}, z{0, 0};
  CHECK(*cosine(a, a) == doctest::Approx(1.0));
  CHECK(*cosine(a, b) == doctest::Approx(0.0));
  CHECK_FALSE(cosine(a, z).has_value());
  CHECK_THROWS_AS(cosine(a, std::vector<double>{1.0}), ShapeError);
}

TEST_CASE("fusion concatenates features and embedding") {
  std::mt19937_64 gen(8);
  const auto features = random_vector(gen, 15);
  const auto emb = truncate_normalize(random_vector(gen, 3072), 1000, Provenance::remote_embedding);
  const auto fused = fuse(features, emb);
  CHECK(fused.dim() == 1015);
  CHECK(fused.provenance == Provenance::fused);
  CHECK(std::equal(features.begin(), features.end(), fused.values.begin()));
  CHECK(std::equal(emb.values.begin(), emb.values.end(), fused.values.begin() + 15));
  CHECK(fuse(features, emb).values == fused.values);

  const auto only = fuse(features, DenseVector{});
  CHECK(only.values == features);

  auto bad = features;
  bad[3] = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(fuse(bad, emb), NumericError);
  auto bad_emb = emb;
  bad_emb.values[0] = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(fuse(features, bad_emb), NumericError);
}

TEST_CASE("standardizer uses population statistics") {
  const auto s = Standardizer::fit({{1.0, 5.0}, {3.0, 5.0}});
  CHECK(s.mean() == std::vector<double>{2.0, 5.0});
  CHECK(s.scale() == std::vector<double>{1.0, 1.0});
  CHECK(s.apply(std::vector<double>{3.0, 7.0}) == std::vector<double>{1.0, 2.0});
  const auto back = Standardizer::from_json(s.to_json());
  CHECK(back.mean() == s.mean());
  CHECK_THROWS_AS(Standardizer::fit({{1.0}, {1.0, 2.0}}), ShapeError);

  const DenseVector emb{{0.6, 0.8}, Provenance::remote_embedding, true};
  const auto fused = fuse(std::vector<double>{3.0, 7.0}, emb, &s);
  CHECK(fused.values == std::vector<double>{1.0, 2.0, 0.6, 0.8});
}
