#pragma once

#include "clickbait/informativeness.hpp"

namespace clickbait::baitness {

struct BaitnessBreakdown {
  double eye_catch = 0;
  double curiosity = 0;
  double sentiment = 0;
  double ease_of_text = 0;
  double composite = 0;
  /// EaseOfText with the unfloored FRES term, min(1, FRES/100), kept for audit.
  /// Can be negative for hard texts; `ease_of_text` floors that term at 0.
  double ease_of_text_raw = 0;
};

/// Composite baitness index: the mean of four subscores, each in [0, 1].
///
///   eye_catch    = clamp01((bait_punct + 3 * capital_ratio + numbers) / 3)
///   curiosity    = sqrt(clamp01((2nd_person + 2 * superlatives + speculatives + bait_phrases) / 4))
///   sentiment    = sqrt(|polarity| * subjectivity)
///   ease_of_text = (clamp01(fres / 100) + min(1, 1.5 * common_words_ratio)) / 2
///
/// Counts enter unnormalized.
BaitnessBreakdown baitness(const informativeness::FeatureVector& f);

}  // namespace clickbait::baitness
