#include <doctest.h>

#include <random>

#include "clickbait/error.hpp"
#include "clickbait/textstats.hpp"
#include "clickbait/unicode.hpp"
#include "support.hpp"

using namespace clickbait;
using namespace clickbait::textstats;

TEST_CASE("tokenize splits words, punctuation and sentences") {
  const auto t = tokenize("You Won't Believe This!");
  CHECK(t.tokens == std::vector<std::string>{"You", "Won't", "Believe", "This"});
  CHECK(t.sentence_count() == 1);
  CHECK(t.char_count == 23);
  CHECK(t.punctuation == std::vector<std::string>{"!"});
  CHECK(t.alnum_char_count == 18);
}

TEST_CASE("tokenize on empty and whitespace input") {
  for (const char* s : {"", "   ", "\t\n"}) {
    const auto t = tokenize(s);
    CHECK(t.tokens.empty());
    CHECK(t.sentences.empty());
  }
}

TEST_CASE("sentence boundaries need trailing whitespace or end of text") {
  CHECK(tokenize("A. B?").sentence_count() == 2);
  CHECK(tokenize("Version 3.5 ships today.").sentence_count() == 1);
  CHECK(tokenize("Wait... what?! Really").sentence_count() == 3);
  CHECK(tokenize("e.g.the end").sentence_count() == 1);
}

TEST_CASE("numbers with separators stay one token") {
  const auto t = tokenize("Profits up 5%, costs 1,000.50 down.");
  CHECK(t.tokens == std::vector<std::string>{"Profits", "up", "5", "costs", "1,000.50", "down"});
  CHECK(t.punctuation == std::vector<std::string>{"%", ",", "."});
}

TEST_CASE("outer apostrophes are punctuation, inner ones are part of the word") {
  const auto t = tokenize("'Don't' they’re");
  CHECK(t.tokens == std::vector<std::string>{"Don't", "they’re"});
  CHECK(t.punctuation.size() == 2);
}

TEST_CASE("char_count counts Unicode scalar values") {
  CHECK(tokenize("Café naïve").char_count == 10);
  CHECK(tokenize("日本語").char_count == 3);
  CHECK(tokenize("日本語").tokens.size() == 1);
}

TEST_CASE("sentence ranges cover every token once, in order") {
  std::mt19937 gen(7);
  const std::vector<std::string> pieces{"word", "Two", "3", "!", "?", ".", " ", " ", ",", "x'y", "  ", "end."};
  for (int trial = 0; trial < 300; ++trial) {
    std::string text;
    const int n = std::uniform_int_distribution<int>(0, 25)(gen);
    for (int i = 0; i < n; ++i) text += pieces[std::uniform_int_distribution<std::size_t>(0, pieces.size() - 1)(gen)];
    const auto t = tokenize(text);
    std::size_t next = 0;
    for (const auto& s : t.sentences) {
      CHECK(s.begin == next);
      CHECK(s.end > s.begin);
      next = s.end;
    }
    CHECK(next == t.tokens.size());
    if (!t.tokens.empty()) CHECK(t.sentence_count() >= 1);
    CHECK(t.char_count == unicode::length(text));
  }
}

TEST_CASE("tokenize is idempotent on its own word stream") {
  for (const char* s : {"You Won't Believe This!", "A. B?", "Profits up 5%, costs 1,000 down.", "'quoted' text"}) {
    const auto first = tokenize(s);
    std::string joined;
    for (const auto& w : first.tokens) joined += w + " ";
    CHECK(tokenize(joined).tokens == first.tokens);
  }
}

TEST_CASE("count_syllables heuristic") {
  CHECK(count_syllables("cat") == 1);
  CHECK(count_syllables("believe") == 2);
  CHECK(count_syllables("a") == 1);
  CHECK(count_syllables("the") == 1);
  CHECK(count_syllables("make") == 1);
  CHECK(count_syllables("rhythm") == 1);
  CHECK(count_syllables("beautiful") == 3);
  CHECK(count_syllables("BANANA") == 3);
  CHECK(count_syllables("tree") == 1);
  CHECK(count_syllables("shh") == 1);
  CHECK_THROWS_AS(count_syllables("123"), DomainError);
  CHECK_THROWS_AS(count_syllables(""), DomainError);
}

TEST_CASE("count_syllables is at least one for any word with a letter") {
  std::mt19937 gen(11);
  const std::string alphabet = "abcdefghijklmnopqrstuvwxyzEY'";
  for (int i = 0; i < 2000; ++i) {
    std::string w(1, alphabet[std::uniform_int_distribution<std::size_t>(0, 25)(gen)]);
    const int n = std::uniform_int_distribution<int>(0, 12)(gen);
    for (int k = 0; k < n; ++k) w.push_back(alphabet[std::uniform_int_distribution<std::size_t>(0, alphabet.size() - 1)(gen)]);
    CHECK(count_syllables(w) >= 1);
  }
}

TEST_CASE("is_superlative uses the irregular list, suffix rule and exceptions") {
  const auto& lex = LexiconSet::defaults();
  CHECK(is_superlative("biggest", lex));
  CHECK_FALSE(is_superlative("west", lex));
  CHECK(is_superlative("best", lex));
  CHECK(is_superlative("Best", lex));
  CHECK(is_superlative("WORST", lex));
  CHECK_FALSE(is_superlative("honest", lex));
  CHECK_FALSE(is_superlative("interest", lex));
  CHECK_FALSE(is_superlative("protest", lex));
  CHECK_FALSE(is_superlative("test", lex));
  CHECK(is_superlative("funniest", lex));
  CHECK_FALSE(is_superlative("cat", lex));
}

TEST_CASE("bundled lexicons satisfy their invariants") {
  const auto& lex = LexiconSet::defaults();
  CHECK_NOTHROW(lex.validate());
  CHECK(lex.stopwords.size() >= 150);
  for (const char* w : {"you", "your", "yours"}) CHECK(lex.second_person_pronouns.count(w) == 1);
  for (const char* w : {"may", "might", "possibly"}) CHECK(lex.speculatives.count(w) == 1);
  for (const auto& w : lex.second_person_pronouns) CHECK(lex.pronouns.count(w) == 1);
  for (const auto& w : lex.stopwords) CHECK(unicode::to_lower(w) == w);
  CHECK(std::find(lex.bait_phrases.begin(), lex.bait_phrases.end(), "tweets") != lex.bait_phrases.end());
  CHECK(std::find(lex.bait_phrases.begin(), lex.bait_phrases.end(), "hilarious") != lex.bait_phrases.end());
  for (const auto& [w, e] : lex.polarity_lexicon) {
    CHECK(e.polarity >= -1.0);
    CHECK(e.polarity <= 1.0);
    CHECK(e.subjectivity >= 0.0);
    CHECK(e.subjectivity <= 1.0);
  }
}

TEST_CASE("lexicon directory overrides only the files present") {
  testsupport::TempDir dir;
  testsupport::write_file(dir / "speculatives.txt", "# custom\nsurely\nSurely\n\nlikely\n");
  const auto lex = LexiconSet::from_directory(dir.path());
  CHECK(lex.speculatives == std::unordered_set<std::string>{"surely", "likely"});
  CHECK(lex.stopwords == LexiconSet::defaults().stopwords);
}

TEST_CASE("lexicon validation rejects a second-person pronoun missing from pronouns") {
  testsupport::TempDir dir;
  testsupport::write_file(dir / "second_person_pronouns.txt", "you\nthou\n");
  CHECK_THROWS_AS(LexiconSet::from_directory(dir.path()), LoadError);
}

TEST_CASE("sentiment lexicon parsing") {
  const auto m = parse_sentiment_lexicon("# word\tpolarity\tsubjectivity\ngreat\t0.8\t0.75\nbad\t-0.7\t0.67\n");
  REQUIRE(m.size() == 2);
  CHECK(m.at("great").polarity == doctest::Approx(0.8));
  CHECK(m.at("bad").subjectivity == doctest::Approx(0.67));
  CHECK_THROWS(parse_sentiment_lexicon("great\tnotanumber\t0.5\n"));
  CHECK_THROWS(parse_sentiment_lexicon("great\t1.5\t0.5\n"));
}

TEST_CASE("lookup_key lowercases and folds the typographic apostrophe") {
  CHECK(lookup_key("Won’t") == "won't");
  CHECK(lookup_key("ÉCOLE") == "école");
}
