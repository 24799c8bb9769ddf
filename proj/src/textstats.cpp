#include "clickbait/textstats.hpp"

#include <string>

#include "clickbait/error.hpp"
#include "clickbait/unicode.hpp"

namespace clickbait::textstats {

namespace {

bool is_word_char(char32_t cp) {
  return unicode::is_letter(cp) || unicode::is_digit(cp) || unicode::is_apostrophe(cp);
}

bool is_terminal(char32_t cp) { return cp == U'.' || cp == U'!' || cp == U'?'; }

bool is_vowel(char32_t cp) {
  switch (cp) {
    case U'a': case U'e': case U'i': case U'o': case U'u': case U'y':
      return true;
    default:
      return false;
  }
}

}  // namespace

TokenizedText tokenize(std::string_view text) {
  TokenizedText out;
  out.original = std::string(text);
  const std::u32string cps = unicode::decode(text);
  const std::size_t n = cps.size();
  out.char_count = n;

  std::size_t sentence_begin = 0;
  auto close_sentence = [&] {
    if (out.tokens.size() > sentence_begin) {
      out.sentences.push_back({sentence_begin, out.tokens.size()});
      sentence_begin = out.tokens.size();
    }
  };
  auto emit_punct = [&](char32_t cp) {
    std::string s;
    unicode::append(s, cp);
    out.punctuation.push_back(s);
    out.stream.push_back(std::move(s));
  };

  std::size_t i = 0;
  while (i < n) {
    const char32_t c = cps[i];
    if (unicode::is_space(c)) {
      ++i;
      continue;
    }
    if (is_word_char(c)) {
      std::size_t j = i + 1;
      while (j < n) {
        const char32_t d = cps[j];
        if (is_word_char(d) || unicode::is_mark(d)) {
          ++j;
        } else if ((d == U',' || d == U'.') && j + 1 < n && unicode::is_digit(cps[j - 1]) &&
                   unicode::is_digit(cps[j + 1])) {
          ++j;
        } else {
          break;
        }
      }
      std::size_t b = i, e = j;
      while (b < e && unicode::is_apostrophe(cps[b])) ++b;
      while (e > b && unicode::is_apostrophe(cps[e - 1])) --e;
      for (std::size_t k = i; k < b; ++k) emit_punct(cps[k]);
      if (b < e) {
        std::u32string_view word(cps.data() + b, e - b);
        for (char32_t w : word) {
          if (unicode::is_letter(w) || unicode::is_digit(w)) ++out.alnum_char_count;
        }
        std::string token = unicode::encode(word);
        out.tokens.push_back(token);
        out.stream.push_back(std::move(token));
      }
      for (std::size_t k = e; k < j; ++k) emit_punct(cps[k]);
      i = j;
      continue;
    }
    emit_punct(c);
    if (is_terminal(c) && (i + 1 == n || unicode::is_space(cps[i + 1]))) close_sentence();
    ++i;
  }
  close_sentence();
  return out;
}

std::string lookup_key(std::string_view token) {
  std::string lower = unicode::to_lower(token);
  std::string out;
  out.reserve(lower.size());
  for (char32_t cp : unicode::decode(lower)) unicode::append(out, unicode::is_apostrophe(cp) ? U'\'' : cp);
  return out;
}

int count_syllables(std::string_view word) {
  const std::u32string cps = unicode::decode(unicode::to_lower(word));
  bool has_letter = false;
  for (char32_t cp : cps) has_letter = has_letter || unicode::is_letter(cp);
  if (!has_letter) throw DomainError("count_syllables: '" + std::string(word) + "' has no letters");

  std::u32string letters;
  for (char32_t cp : cps) {
    if (unicode::is_letter(cp)) letters.push_back(cp);
  }
  int groups = 0;
  bool in_group = false;
  for (char32_t cp : letters) {
    const bool v = is_vowel(cp);
    if (v && !in_group) ++groups;
    in_group = v;
  }
  // Silent terminal 'e': a lone final 'e' after a consonant, unless it is the
  // only vowel group.
  const std::size_t m = letters.size();
  if (groups > 1 && m >= 2 && letters[m - 1] == U'e' && !is_vowel(letters[m - 2])) --groups;
  return groups < 1 ? 1 : groups;
}

bool is_superlative(std::string_view token, const LexiconSet& lexicons) {
  const std::string key = lookup_key(token);
  if (lexicons.irregular_superlatives.contains(key)) return true;
  if (key.size() < 3 || key.compare(key.size() - 3, 3, "est") != 0) return false;
  if (unicode::length(key) < 5) return false;
  return !lexicons.superlative_suffix_exceptions.contains(key);
}

}  // namespace clickbait::textstats
