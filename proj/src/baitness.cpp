#include "clickbait/baitness.hpp"

#include <algorithm>
#include <cmath>

namespace clickbait::baitness {

namespace {
double clamp01(double x) { return std::clamp(x, 0.0, 1.0); }
}  // namespace

BaitnessBreakdown baitness(const informativeness::FeatureVector& f) {
  BaitnessBreakdown b;
  b.eye_catch = std::min(1.0, std::max(0.0, (f.bait_punct_count + 3.0 * f.capital_letters_ratio + f.numbers_count) / 3.0));
  b.curiosity = std::sqrt(std::min(
      1.0, std::max(0.0, (f.second_person_pronouns_count + 2.0 * f.superlatives_ratio + f.speculatives_count +
                          f.bait_phrases_count) /
                             4.0)));
  b.sentiment = std::sqrt(clamp01(std::abs(f.polarity) * f.subjectivity));
  const double common = std::min(1.0, 1.5 * f.common_words_ratio);
  b.ease_of_text = (clamp01(f.fres / 100.0) + common) / 2.0;
  b.ease_of_text_raw = (std::min(1.0, f.fres / 100.0) + common) / 2.0;
  b.composite = (b.eye_catch + b.curiosity + b.sentiment + b.ease_of_text) / 4.0;
  return b;
}

}  // namespace clickbait::baitness
