#include <doctest.h>

#include <cmath>
#include <map>
#include <random>

#include "clickbait/error.hpp"
#include "clickbait/informativeness.hpp"
#include "oracles.hpp"
#include "readability_fixtures.hpp"

using namespace clickbait;
using namespace clickbait::informativeness;
using textstats::LexiconSet;
using textstats::tokenize;

namespace {

double near_ulp(double a, double b) { return std::abs(a - b) <= 1e-9; }

std::vector<std::string> random_tokens(std::mt19937_64& gen, std::size_t n, std::size_t vocab) {
  std::vector<std::string> out;
  std::geometric_distribution<std::size_t> pick(3.0 / static_cast<double>(vocab));
  for (std::size_t i = 0; i < n; ++i) out.push_back("w" + std::to_string(std::min(pick(gen), vocab - 1)));
  return out;
}

std::string join(const std::vector<std::string>& tokens) {
  std::string s;
  for (const auto& t : tokens) s += t + " ";
  return s;
}

}  // namespace

TEST_CASE("readability matches direct formula evaluation on hand-counted fixtures") {
  for (const auto& fx : fixtures::kReadability) {
    CAPTURE(fx.text);
    const auto t = tokenize(fx.text);
    REQUIRE(t.tokens.size() == static_cast<std::size_t>(fx.words));
    REQUIRE(t.sentence_count() == static_cast<std::size_t>(fx.sentences));
    REQUIRE(t.alnum_char_count == static_cast<std::size_t>(fx.chars));
    const auto r = readability(t);
    CHECK_FALSE(r.degenerate);
    CHECK(near_ulp(r.fres, oracle::fres(fx.words, fx.sentences, fx.syllables)));
    CHECK(near_ulp(r.fkgl, oracle::fkgl(fx.words, fx.sentences, fx.syllables)));
    CHECK(near_ulp(r.ari, oracle::ari(fx.chars, fx.words, fx.sentences)));
  }
}

TEST_CASE("readability worked example and degenerate input") {
  const auto r = readability(tokenize("The cat sat."));
  CHECK(r.fres == doctest::Approx(119.19).epsilon(1e-12));
  CHECK(r.fkgl == doctest::Approx(-2.62).epsilon(1e-12));
  CHECK(r.ari == doctest::Approx(-5.80).epsilon(1e-12));
  const auto e = readability(tokenize(""));
  CHECK(e.degenerate);
  CHECK(e.fres == 0.0);
  CHECK(e.fkgl == 0.0);
  CHECK(e.ari == 0.0);
}

TEST_CASE("readability is invariant under duplicating every sentence") {
  for (const auto& fx : fixtures::kReadability) {
    const std::string text = fx.text;
    const auto a = readability(tokenize(text));
    const auto b = readability(tokenize(text + " " + text));
    CHECK(a.fres == doctest::Approx(b.fres).epsilon(1e-12));
    CHECK(a.fkgl == doctest::Approx(b.fkgl).epsilon(1e-12));
    CHECK(a.ari == doctest::Approx(b.ari).epsilon(1e-12));
  }
}

TEST_CASE("lexical diversity worked examples") {
  const auto d = lexical_diversity(tokenize("the cat sat on the mat"));
  CHECK(d.ttr == doctest::Approx(5.0 / 6.0).epsilon(1e-12));
  CHECK(std::abs(d.cttr - 5.0 / std::sqrt(12.0)) <= 1e-12);
  CHECK(std::abs(d.maas_index - (std::log(6.0) - std::log(5.0)) / (std::log(6.0) * std::log(6.0))) <= 1e-12);
  CHECK(d.hdd_fallback);
  CHECK(d.hdd == d.ttr);

  const auto distinct = lexical_diversity(tokenize("one two three four five six seven eight nine ten"));
  CHECK(distinct.ttr == 1.0);
  CHECK(distinct.maas_index == 0.0);

  const auto single = lexical_diversity(tokenize("word"));
  CHECK(single.maas_degenerate);
  CHECK(single.maas_index == 0.0);

  const auto empty = lexical_diversity(tokenize(""));
  CHECK(empty.ttr == 0.0);
  CHECK(empty.hdd == 0.0);
}

TEST_CASE("types are case-insensitive") {
  const auto d = lexical_diversity(tokenize("The the THE cat"));
  CHECK(d.ttr == doctest::Approx(0.5));
}

TEST_CASE("cttr and maas match hand evaluation on random texts") {
  std::mt19937_64 gen(21);
  for (int trial = 0; trial < 200; ++trial) {
    const auto tokens = random_tokens(gen, std::uniform_int_distribution<std::size_t>(2, 150)(gen), 40);
    const double n = static_cast<double>(tokens.size());
    const double t = static_cast<double>(oracle::token_set(join(tokens)).size());
    const auto d = lexical_diversity(tokenize(join(tokens)));
    CHECK(d.ttr * n == doctest::Approx(t).epsilon(1e-12));
    CHECK(std::abs(d.cttr - t / std::sqrt(2.0 * n)) <= 1e-12);
    CHECK(std::abs(d.maas_index - (std::log(n) - std::log(t)) / (std::log(n) * std::log(n))) <= 1e-12);
  }
}

TEST_CASE("exact HD-D agrees with a Monte-Carlo oracle") {
  std::mt19937_64 gen(42);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(42, 200)(gen);
    const auto tokens = random_tokens(gen, n, 60);
    const auto d = lexical_diversity(tokenize(join(tokens)));
    CHECK_FALSE(d.hdd_fallback);
    const double mc = oracle::monte_carlo_hdd(tokens, 100000, 1000 + static_cast<std::uint64_t>(trial));
    CAPTURE(n);
    CHECK(std::abs(d.hdd - mc) <= 1e-3);
    CHECK(d.hdd >= 0.0);
    CHECK(d.hdd <= 1.0);
  }
}

TEST_CASE("HD-D of 42 distinct tokens is 1 and of one repeated token is 1/42") {
  std::vector<std::string> distinct, same(42, "same");
  for (int i = 0; i < 42; ++i) distinct.push_back("t" + std::to_string(i));
  CHECK(lexical_diversity(tokenize(join(distinct))).hdd == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(lexical_diversity(tokenize(join(same))).hdd == doctest::Approx(1.0 / 42.0).epsilon(1e-12));
}

TEST_CASE("surface measures") {
  const auto s = surface_measures(tokenize("You Won't BELIEVE This!"));
  CHECK(s.char_count == 23);
  CHECK(s.word_count == 4);
  CHECK(s.capital_words_count == 1);
  CHECK(s.mean_word_length == doctest::Approx((3.0 + 5 + 7 + 4) / 4.0));
  CHECK(s.capital_letters_ratio == doctest::Approx(10.0 / 23.0));
  const auto e = surface_measures(tokenize(""));
  CHECK(e.char_count == 0);
  CHECK(e.word_count == 0);
  CHECK(e.mean_word_length == 0);
  CHECK(e.capital_letters_ratio == 0);
  CHECK(surface_measures(tokenize("abc")).capital_letters_ratio == 0);
  CHECK(surface_measures(tokenize("I A OK")).capital_words_count == 1);
}

TEST_CASE("lexicon measures") {
  const auto& lex = LexiconSet::defaults();
  const auto m = lexicon_measures(tokenize("you might like the best tweets"), lex);
  CHECK(m.second_person_pronouns_count == 1);
  CHECK(m.speculatives_count == 1);
  CHECK(m.bait_phrases_count == 1);
  CHECK(m.superlatives_ratio == doctest::Approx(1.0 / 6.0));
  CHECK(m.pronouns_count >= 1);

  const auto z = lexicon_measures(tokenize("stocks fell sharply"), lex);
  CHECK(z.second_person_pronouns_count == 0);
  CHECK(z.speculatives_count == 0);
  CHECK(z.bait_phrases_count == 0);
  CHECK(z.superlatives_ratio == 0);
  CHECK(z.pronouns_count == 0);

  const auto e = lexicon_measures(tokenize(""), lex);
  CHECK(e.common_words_ratio == 0);
  CHECK(e.bait_phrases_count == 0);
}

TEST_CASE("appending a stopword never lowers the stopword count") {
  const auto& lex = LexiconSet::defaults();
  std::mt19937 gen(2);
  const std::vector<std::string> words{"the", "market", "of", "rally", "cat", "and", "is", "crash"};
  for (int trial = 0; trial < 200; ++trial) {
    std::string text;
    for (int k = std::uniform_int_distribution<int>(0, 8)(gen); k > 0; --k) text += words[gen() % words.size()] + " ";
    const auto before = lexicon_measures(tokenize(text), lex);
    const auto after = lexicon_measures(tokenize(text + "the"), lex);
    const double wb = static_cast<double>(tokenize(text).tokens.size());
    CHECK(after.common_words_ratio * (wb + 1) >= before.common_words_ratio * wb - 1e-9);
  }
}

TEST_CASE("phrase matching respects word boundaries") {
  CHECK(count_phrase("you won't believe what happened", "you won't believe") == 1);
  CHECK(count_phrase("youth won't believe", "you won't believe") == 0);
  CHECK(count_phrase("tweets and more tweets", "tweets") == 2);
  CHECK(count_phrase("retweets", "tweets") == 0);
}

TEST_CASE("punctuation measures") {
  const auto p = punctuation_measures(tokenize("What?! 7 secrets (revealed)"));
  CHECK(p.bait_punct_count == 3);
  CHECK(p.numbers_count == 1);
  CHECK(punctuation_measures(tokenize("Profits up 5%, costs down.")).nonbait_punct_count == 3);
  const auto none = punctuation_measures(tokenize("no marks here"));
  CHECK(none.punctuation_ratio == 0);
  CHECK(none.bait_punct_count == 0);
  CHECK(none.nonbait_punct_count == 0);
  CHECK(none.numbers_count == 0);
  CHECK(punctuation_measures(tokenize("In 2024 there were 1,000 cases")).numbers_count == 2);
}

TEST_CASE("is_number_token") {
  CHECK(is_number_token("2024"));
  CHECK(is_number_token("1,000"));
  CHECK(is_number_token("3.5"));
  CHECK_FALSE(is_number_token("abc"));
  CHECK_FALSE(is_number_token("3rd"));
  CHECK_FALSE(is_number_token(""));
}

TEST_CASE("sentiment averages matched entries") {
  LexiconSet lex = LexiconSet::defaults();
  lex.polarity_lexicon = {{"great", {0.8, 0.75}}, {"good", {0.7, 0.6}}, {"bad", {-0.7, 0.6}}};
  const auto none = sentiment(tokenize("stocks fell"), lex);
  CHECK(none.polarity == 0);
  CHECK(none.subjectivity == 0);
  CHECK(sentiment(tokenize("great great"), lex).polarity == doctest::Approx(0.8));
  CHECK(sentiment(tokenize("good bad"), lex).polarity == doctest::Approx(0.0));
  CHECK(sentiment(tokenize("Great news"), lex).subjectivity == doctest::Approx(0.75));
}

TEST_CASE("similarity") {
  using representations::DenseVector;
  const DenseVector a{{1.0, 2.0, 3.0}};
  const DenseVector b{{2.0, 4.0, 6.0}};
  CHECK(similarity(a, a).score == doctest::Approx(1.0));
  CHECK(similarity(a, b).score == doctest::Approx(1.0));
  CHECK(similarity(a, b).available);
  CHECK(similarity(DenseVector{{1.0, 0.0}}, DenseVector{{0.0, 1.0}}).score == doctest::Approx(0.0));
  const auto z = similarity(a, DenseVector{{0.0, 0.0, 0.0}});
  CHECK_FALSE(z.available);
  CHECK(z.score == 0.0);
  CHECK_THROWS_AS(similarity(a, DenseVector{{1.0}}), ShapeError);
}

TEST_CASE("extract_features with and without a body") {
  const auto& lex = LexiconSet::defaults();
  representations::WordVectorTable table(2);
  table.add("cat", std::vector<double>{1.0, 0.0});
  table.add("dog", std::vector<double>{0.0, 1.0});
  corpus::CorpusRecord r;
  r.title = "The cat sat";
  r.body = "A cat and a dog";
  const auto with = extract_features(r, lex, &table);
  CHECK(with.similarity_available);
  CHECK(with.similarity_score == doctest::Approx(1.0 / std::sqrt(2.0)));
  r.body.reset();
  const auto without = extract_features(r, lex, &table);
  CHECK_FALSE(without.similarity_available);
  CHECK(without.similarity_score == 0.0);
  CHECK(extract_features(r, lex, &table) == without);
  CHECK(without.values()[measure_index("fres")] == without.fres);
}

TEST_CASE("feature vector values round-trip and names are canonical") {
  const auto& names = FeatureVector::names();
  CHECK(names.front() == "char_count");
  CHECK(names.back() == "ari");
  CHECK(names[15] == "similarity_score");
  const auto f = extract_features("You Won't Believe What This Dog Did Next!", LexiconSet::defaults());
  CHECK(FeatureVector::from_values(f.values(), f.similarity_available) == f);
  CHECK_THROWS_AS(measure_index("nope"), SchemaError);
}

TEST_CASE("feature subsets") {
  const auto& d = default_subset();
  CHECK(d.indices.size() == 15);
  CHECK(d.column_names().front() == "char_count");
  CHECK(all_measures_subset().indices.size() == 25);
  CHECK(resolve_subset("default15").indices == d.indices);
  const auto custom = resolve_subset("ttr,fres");
  CHECK(custom.column_names() == std::vector<std::string>{"ttr", "fres"});
  CHECK_THROWS_AS(resolve_subset("ttr,bogus"), SchemaError);
}

TEST_CASE("feature ranges hold on fuzzed Unicode input") {
  const auto& lex = LexiconSet::defaults();
  std::mt19937 gen(17);
  const std::vector<std::string> pieces{"You", "best", "!", "?", "\"", "(", "$", "%", "2024", "1,000", " ", " ", "é",
                                        "日本", "WOW", "might", "tweets", "great", "bad", ".", "\xF0\x9F\x98\x80", "'s",
                                        "-", "\t", "x"};
  for (int trial = 0; trial < 3000; ++trial) {
    std::string text;
    for (int k = std::uniform_int_distribution<int>(1, 30)(gen); k > 0; --k) text += pieces[gen() % pieces.size()];
    CAPTURE(text);
    if (text.find_first_not_of(" \t") == std::string::npos) {
      CHECK_THROWS(extract_features(text, lex));
      continue;
    }
    const auto f = extract_features(text, lex);
    for (double r : {f.common_words_ratio, f.capital_letters_ratio, f.punctuation_ratio, f.superlatives_ratio, f.ttr}) {
      CHECK(r >= 0.0);
      CHECK(r <= 1.0);
    }
    for (double c : {f.char_count, f.word_count, f.capital_words_count, f.bait_punct_count, f.nonbait_punct_count,
                     f.numbers_count, f.pronouns_count, f.second_person_pronouns_count, f.speculatives_count,
                     f.bait_phrases_count}) {
      CHECK(c >= 0.0);
      CHECK(c == std::floor(c));
    }
    CHECK(f.polarity >= -1.0);
    CHECK(f.polarity <= 1.0);
    CHECK(f.subjectivity >= 0.0);
    CHECK(f.subjectivity <= 1.0);
    CHECK(f.cttr >= 0.0);
    CHECK(f.hdd >= 0.0);
    CHECK(f.hdd <= 1.0);
    for (double v : f.values()) CHECK(std::isfinite(v));
  }
}
