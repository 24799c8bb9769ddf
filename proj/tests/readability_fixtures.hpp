#pragma once

// Readability fixtures with word, sentence, syllable and word-character counts
// tallied by hand.

namespace fixtures {

struct ReadabilityFixture {
  const char* text;
  double words, sentences, syllables, chars;
};

inline const ReadabilityFixture kReadability[] = {
    {"The cat sat.", 3, 1, 3, 9},
    {"Dogs ran home.", 3, 1, 3, 11},
    {"The big red sun is hot.", 6, 1, 6, 17},
    {"Open the window.", 3, 1, 5, 13},
    {"The garden is open. We ran to it.", 8, 2, 10, 24},
    {"Seven paper cats sat on a red mat.", 8, 1, 10, 26},
    {"A banana.", 2, 1, 4, 7},
    {"The elephant ran fast. It was big. We sat.", 9, 3, 11, 31},
    {"Computer music is fun.", 4, 1, 7, 18},
    {"Run!", 1, 1, 1, 3},
    {"Is it hot? Yes it is.", 6, 2, 6, 14},
    {"My dog has 3 red hats.", 6, 1, 6, 16},
    {"An animal sat in the sun.", 6, 1, 8, 19},
    {"Stop. Go. Stop. Go.", 4, 4, 4, 12},
    {"Seven elephants ran to the garden window.", 7, 1, 12, 34},
    {"The cat, the dog and the rat ran.", 8, 1, 8, 24},
    {"Paper is open on a window.", 6, 1, 9, 20},
    {"It is 2024 and we ran.", 6, 1, 6, 16},
    {"Music! Music? Music.", 3, 3, 6, 15},
    {"We sat on the mat with the big fat cat and the dog.", 13, 1, 13, 38},
};

}  // namespace fixtures
